#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sgt/perm.hpp"

namespace sgt {

/// Thrown when an enumeration bound (element cache or subgroup lattice) is hit.
struct threshold_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when an operation's subgroup-containment precondition fails.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

constexpr std::size_t kElementLimit = 100000;

/// One level of a stabilizer chain: a base point, the generators of the
/// current stabilizer, and a transversal u_p with u_p(base) = p for every
/// point p in the base orbit.
struct ChainLevel {
  int base_point = 0;
  std::vector<Perm> gens;
  std::vector<std::optional<Perm>> transversal;  // indexed by point-1
  std::size_t orbit_size = 0;
};

/// Deterministic Schreier-Sims stabilizer chain. Gives exact order,
/// membership by sifting, and element enumeration.
class StabilizerChain {
 public:
  StabilizerChain(int degree, const std::vector<Perm>& gens);

  std::uint64_t order() const;
  bool contains(const Perm& p) const;

  /// Residue of p after sifting through every level; identity iff member.
  Perm sift(const Perm& p) const;

  const std::vector<ChainLevel>& levels() const { return levels_; }

  /// All group elements in transversal-product order (not sorted).
  std::vector<Perm> enumerate(std::size_t limit) const;

 private:
  void add_generator(std::size_t level, const Perm& g);
  void recompute_orbit(std::size_t level);
  void close_level(std::size_t level);

  int degree_;
  std::vector<ChainLevel> levels_;
};

/// A finite permutation group: generators plus a stabilizer chain, with the
/// full element set, normal subgroups and chief series cached lazily.
/// Immutable after construction; cheap to copy (shared internals); safe to
/// share across threads.
class Group {
 public:
  /// Builds from generators (Schreier-Sims). An empty list gives the trivial
  /// group of the stated degree. Deterministic for a fixed generator list.
  Group(int degree, std::vector<Perm> generators);

  static Group trivial(int degree) { return Group(degree, {}); }

  int degree() const;
  std::uint64_t order() const;
  bool is_trivial() const { return order() == 1; }

  /// Input generators, identity dropped, duplicates removed, order kept.
  const std::vector<Perm>& generators() const;

  /// Membership via sifting through the stabilizer chain.
  bool contains(const Perm& p) const;

  /// Every generator of h sifts to the identity here.
  bool contains_group(const Group& h) const;

  /// Element-set equality (same order plus mutual containment).
  bool same_group_as(const Group& h) const;

  /// The full element set in canonical order (lexicographic on image
  /// sequences). Cached after the first call. Throws threshold_exceeded if
  /// order() > limit.
  const std::vector<Perm>& elements(std::size_t limit = kElementLimit) const;

  /// All normal subgroups in canonical order (by order, then element list);
  /// always includes the trivial subgroup and the group itself.
  const std::vector<Group>& normal_subgroups() const;

  /// A deterministic 64-bit digest of the element set; equal groups (as
  /// element sets) get equal keys.
  std::uint64_t element_set_key() const;

  const StabilizerChain& chain() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// --- elementwise constructions -------------------------------------------

/// Smallest normal subgroup of g containing s. Precondition: s <= g.
Group normal_closure(const Group& g, const Group& s);

/// Elements of g commuting with every generator of h. Both within the
/// element-enumeration threshold.
Group centralizer(const Group& g, const Group& h);

/// Largest normal subgroup of g contained in b (the core b_g).
/// Precondition: b <= g.
Group core(const Group& g, const Group& b);

/// Element-filtering intersection.
Group intersect(const Group& a, const Group& b);

/// <a, b> inside g. Preconditions: a <= g and b <= g.
Group join(const Group& g, const Group& a, const Group& b);

/// The subgroup x^-1 h x.
Group conjugate_group(const Group& h, const Perm& x);

/// [a, b] = subgroup generated by all commutators of elements of a with
/// elements of b.
Group commutator_group(const Group& a, const Group& b);

/// Direct product acting on disjoint point sets (degree a.degree()+b.degree()).
Group direct_product(const Group& a, const Group& b);

/// Rebuilds a group from a set of permutations already known to be closed
/// under the group operations (order of the result must equal elems.size()).
/// A small generating set is extracted greedily in canonical element order.
Group group_from_elements(int degree, const std::vector<Perm>& elems);

}  // namespace sgt
