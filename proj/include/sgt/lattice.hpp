#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgt/group.hpp"

namespace sgt {

constexpr std::uint64_t kLatticeOrderLimit = 400;

/// A chief factor above/below of the ambient group, i.e. both are normal and
/// nothing normal sits strictly between them. Carries the centralizer
/// C_G(above/below) computed when the series is built.
struct ChiefFactor {
  Group below;
  Group above;
  std::uint64_t factor_order = 0;
  Group centralizer;                    // C_G(above/below)
  std::uint64_t centralizer_index = 0;  // |G : centralizer|
};

enum class TieBreak { smallest_first, largest_first };

/// The complete subgroup lattice of a group, with conjugacy classes of
/// subgroups and normality flags. Immutable once built.
class SubgroupLattice {
 public:
  /// Exhaustive enumeration: every cyclic subgroup, then pairwise joins to a
  /// fixpoint. Throws threshold_exceeded when |g| > order_limit.
  static SubgroupLattice enumerate(const Group& g,
                                   std::uint64_t order_limit = kLatticeOrderLimit);

  const Group& parent() const { return parent_; }
  std::size_t size() const { return subgroups_.size(); }
  const Group& subgroup(std::size_t i) const { return subgroups_[i]; }
  const std::vector<Group>& subgroups() const { return subgroups_; }

  bool is_normal(std::size_t i) const { return normal_[i]; }
  std::size_t class_of(std::size_t i) const { return class_of_[i]; }
  const std::vector<std::vector<std::size_t>>& conjugacy_classes() const { return classes_; }

  /// Canonically first member of each conjugacy class, ascending.
  std::vector<std::size_t> class_representatives() const;

  /// Lattice index of a subgroup given by element-set identity, if present.
  std::optional<std::size_t> index_of(const Group& h) const;

  /// |subgroup(i) ^ subgroup(j)| with memoization (the full intersection
  /// group is not retained).
  std::uint64_t intersection_order(std::size_t i, std::size_t j) const;

  /// Indices of subgroups contained in subgroup(i).
  std::vector<std::size_t> subgroups_within(std::size_t i) const;

 private:
  explicit SubgroupLattice(Group parent) : parent_(std::move(parent)) {}

  Group parent_;
  std::vector<Group> subgroups_;           // sorted by (order, element list)
  std::vector<bool> normal_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> classes_;
  mutable std::vector<std::int64_t> meet_order_;  // triangular memo, -1 = unset
};

/// All normal subgroups of g in canonical order (1 and g included). Computed
/// as the join-closure of normal closures of cyclic subgroups; agrees with
/// the lattice normality flags (property-tested).
const std::vector<Group>& normal_subgroups(const Group& g);

/// Nontrivial normal subgroups minimal among nontrivial ones. g must be
/// nontrivial.
std::vector<Group> minimal_normal_subgroups(const Group& g);

/// Ascending chain 1 = N0 < N1 < ... < Nk = g of normal subgroups of g with
/// no normal subgroup strictly between consecutive entries. Ties are broken
/// by smallest order then smallest canonical element list (or the reverse).
std::vector<ChiefFactor> chief_series(const Group& g,
                                      TieBreak tie_break = TieBreak::smallest_first);

/// Elements x of g with [x,h] in f.below for every generator h of f.above.
Group centralizer_of_chief_factor(const Group& g, const Group& below, const Group& above);

/// Permutation group of degree |g:n| from the action on right cosets of n.
/// Precondition: n normal in g.
Group quotient(const Group& g, const Group& n);

/// Multiset of element orders, ascending (order-profile comparisons stand in
/// for isomorphism tests at this scale).
std::vector<std::uint64_t> element_order_profile(const Group& g);

}  // namespace sgt
