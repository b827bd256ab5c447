#include "sgt/hall.hpp"

#include <algorithm>

namespace sgt {

std::size_t sylow_index(const SubgroupLattice& lat, int p) {
  std::uint64_t target = p_part(lat.parent().order(), p);
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.subgroup(i).order() == target) return i;
  throw std::logic_error("sylow: no subgroup of order " + std::to_string(target) +
                         " (lattice incomplete?)");
}

Group sylow(const SubgroupLattice& lat, int p) { return lat.subgroup(sylow_index(lat, p)); }

HallReport hall_analysis(const SubgroupLattice& lat, const std::set<int>& pi) {
  HallReport rep;
  rep.pi = pi;
  std::uint64_t target = pi_part(lat.parent().order(), pi);
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.subgroup(i).order() == target) rep.hall_subgroups.push_back(i);

  rep.exists = !rep.hall_subgroups.empty();
  if (!rep.exists) return rep;

  std::size_t cls = lat.class_of(rep.hall_subgroups.front());
  rep.conjugate = std::all_of(rep.hall_subgroups.begin(), rep.hall_subgroups.end(),
                              [&](std::size_t i) { return lat.class_of(i) == cls; });
  if (!rep.conjugate) return rep;

  // D_pi: every pi-subgroup lies inside some Hall pi-subgroup
  rep.dominated = true;
  for (std::size_t i = 0; i < lat.size() && rep.dominated; ++i) {
    std::uint64_t o = lat.subgroup(i).order();
    if (pi_part(o, pi) != o) continue;  // not a pi-subgroup
    bool inside = false;
    for (std::size_t h : rep.hall_subgroups) {
      if (lat.subgroup(h).contains_group(lat.subgroup(i))) {
        inside = true;
        break;
      }
    }
    if (!inside) rep.dominated = false;
  }
  return rep;
}

bool satisfies_D_class(const SubgroupLattice& lat, const SigmaPartition& sigma, int class_id) {
  if (!sigma.is_prime_wise()) {
    if (class_id < 0 || class_id > sigma.residual_id() ||
        (class_id == sigma.residual_id() && !sigma.has_residual()))
      throw std::invalid_argument("satisfies_D_class: unknown class id " +
                                  std::to_string(class_id));
  }
  auto primes = prime_set(lat.parent().order());
  std::set<int> group_primes(primes.begin(), primes.end());
  return hall_analysis(lat, sigma.class_primes_within(class_id, group_primes)).dominated;
}

CompleteHallSet complete_hall_sigma_set(const SubgroupLattice& lat, const SigmaPartition& sigma) {
  CompleteHallSet out;
  auto primes = prime_set(lat.parent().order());
  std::set<int> group_primes(primes.begin(), primes.end());
  for (int id : sigma.signature_of_group(lat.parent())) {
    HallReport rep = hall_analysis(lat, sigma.class_primes_within(id, group_primes));
    if (!rep.exists) {
      out.complete = false;
      out.failing_class = id;
      out.members.clear();
      return out;
    }
    out.members.push_back(rep.hall_subgroups.front());
  }
  out.complete = true;
  return out;
}

}  // namespace sgt
