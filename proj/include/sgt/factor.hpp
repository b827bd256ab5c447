#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sgt/hall.hpp"
#include "sgt/lattice.hpp"

namespace sgt {

/// A found factorization G = A*B (or triple G = AB = BC = CA), by lattice
/// indices.
struct Factorization {
  std::size_t a = 0;
  std::size_t b = 0;
  std::optional<std::size_t> c;  // set for triples
  bool proper = false;           // all listed factors are proper subgroups
};

/// G = AB by the product formula |A||B| = |G||A meet B|.
/// Preconditions: A <= G and B <= G.
bool is_factorization(const Group& g, const Group& a, const Group& b);

/// All factorizations with A ranging over conjugacy-class representatives and
/// B over every subgroup, in canonical scan order. The filter sees lattice
/// indices. Pairs whose orders cannot cover |G| are pruned before the filter
/// runs.
std::vector<Factorization> find_factorizations(
    const SubgroupLattice& lat,
    const std::function<bool(std::size_t a, std::size_t b)>& pair_filter);

/// All triples (A over class representatives, B and C over every subgroup)
/// with AB = BC = CA = G and every member passing the filter.
std::vector<Factorization> find_triple_factorizations(
    const SubgroupLattice& lat, const std::function<bool(std::size_t)>& subgroup_filter);

/// Clause-by-clause check of the Hall-subgroup product property: with
/// G = AB, G satisfying D_pi, and A, B owning normal Hall pi-subgroups
/// A_pi and B_pi, verifies that the set A_pi*B_pi equals B_pi*A_pi, that it
/// is a Hall pi-subgroup of G, and that [A_pi, B_pi] <= O_pi(G).
struct ProductHallReport {
  bool applicable = false;
  std::string inapplicable_reason;
  bool sets_equal = false;
  bool is_hall_subgroup = false;
  bool commutator_in_o_pi = false;
  std::uint64_t product_size = 0;
  bool all_hold() const { return sets_equal && is_hall_subgroup && commutator_in_o_pi; }
};
ProductHallReport product_hall_check(const SubgroupLattice& lat, const Group& a, const Group& b,
                                     const std::set<int>& pi);

/// The literal product set {a*b : a in A, b in B}.
std::vector<Perm> set_product(const Group& a, const Group& b);

/// The normal Hall pi-subgroup of g, when g has one.
std::optional<Group> normal_hall_subgroup(const Group& g, const std::set<int>& pi);

}  // namespace sgt
