#pragma once

// Independent brute-force oracles used to freeze expected values. These stay
// deliberately naive and must not share code paths with the library
// implementations they check.

#include <cstdint>
#include <set>
#include <vector>

#include "sgt/group.hpp"

namespace sgt::oracle {

/// Subgroup enumeration by breadth-first closure of two-generated subgroups
/// <x,y> over all element pairs, then joins iterated to a fixpoint.
std::vector<std::vector<Perm>> subgroups_by_pair_closure(const Group& g);

/// Classical nilpotency by element-order counting: for every prime p dividing
/// |G|, the number of elements of p-power order equals the p-part of |G|
/// (equivalently every Sylow subgroup is normal).
bool nilpotent_by_element_orders(const Group& g);

/// Classical solubility: the derived series, with each commutator subgroup
/// generated from all element pairs, reaches the trivial group.
bool soluble_by_derived_series(const Group& g);

/// The literal product set {a*b : a in A, b in B}, sorted.
std::vector<Perm> literal_set_product(const std::vector<Perm>& a, const std::vector<Perm>& b);

/// Core as the literal intersection of the conjugates of B over every element
/// of G.
std::vector<Perm> core_by_conjugate_intersection(const Group& g, const Group& b);

/// Centralizer by filtering against every element (not just generators) of h.
std::vector<Perm> centralizer_by_full_filter(const Group& g, const Group& h);

}  // namespace sgt::oracle
