#pragma once

#include <optional>
#include <set>
#include <vector>

#include "sgt/lattice.hpp"
#include "sgt/sigma.hpp"

namespace sgt {

/// Outcome of the E_pi / C_pi / D_pi battery for one prime set.
/// dominated => conjugate => exists holds by construction.
struct HallReport {
  std::set<int> pi;
  bool exists = false;     // E_pi: some subgroup has order the full pi-part
  bool conjugate = false;  // C_pi: all Hall pi-subgroups in one conjugacy class
  bool dominated = false;  // D_pi: every pi-subgroup inside some Hall pi-subgroup
  std::vector<std::size_t> hall_subgroups;  // lattice indices, ascending
};

/// Canonically first Sylow p-subgroup (order = p-part of the parent's order).
std::size_t sylow_index(const SubgroupLattice& lat, int p);
Group sylow(const SubgroupLattice& lat, int p);

/// Lattice scan for E_pi, C_pi, D_pi.
HallReport hall_analysis(const SubgroupLattice& lat, const std::set<int>& pi);

/// D_{sigma_i} restricted to the primes dividing the parent's order.
bool satisfies_D_class(const SubgroupLattice& lat, const SigmaPartition& sigma, int class_id);

/// One Hall sigma_i-subgroup per class in sigma(G), if every class has one.
struct CompleteHallSet {
  bool complete = false;
  std::vector<std::size_t> members;  // lattice indices, one per class of sigma(G)
  std::optional<int> failing_class;  // first class without a Hall subgroup
};
CompleteHallSet complete_hall_sigma_set(const SubgroupLattice& lat, const SigmaPartition& sigma);

}  // namespace sgt
