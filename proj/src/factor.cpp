#include "sgt/factor.hpp"

#include <algorithm>
#include <unordered_set>

namespace sgt {

bool is_factorization(const Group& g, const Group& a, const Group& b) {
  if (!g.contains_group(a) || !g.contains_group(b))
    throw precondition_error("is_factorization: factor not contained in G");
  return a.order() * b.order() == g.order() * intersect(a, b).order();
}

namespace {

// product-formula check through the lattice's memoized intersection orders
bool covers(const SubgroupLattice& lat, std::size_t i, std::size_t j) {
  std::uint64_t oa = lat.subgroup(i).order();
  std::uint64_t ob = lat.subgroup(j).order();
  std::uint64_t og = lat.parent().order();
  if (oa * ob % og != 0) return false;
  return oa * ob == og * lat.intersection_order(i, j);
}

}  // namespace

std::vector<Factorization> find_factorizations(
    const SubgroupLattice& lat,
    const std::function<bool(std::size_t a, std::size_t b)>& pair_filter) {
  std::vector<Factorization> found;
  std::uint64_t og = lat.parent().order();
  for (std::size_t a : lat.class_representatives()) {
    std::uint64_t oa = lat.subgroup(a).order();
    for (std::size_t b = 0; b < lat.size(); ++b) {
      std::uint64_t ob = lat.subgroup(b).order();
      if (oa * ob % og != 0) continue;  // divisibility pruning
      if (!covers(lat, a, b)) continue;
      if (!pair_filter(a, b)) continue;
      found.push_back(Factorization{a, b, std::nullopt, oa < og && ob < og});
    }
  }
  return found;
}

std::vector<Factorization> find_triple_factorizations(
    const SubgroupLattice& lat, const std::function<bool(std::size_t)>& subgroup_filter) {
  std::vector<Factorization> found;
  std::uint64_t og = lat.parent().order();

  std::vector<std::size_t> passing;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (subgroup_filter(i)) passing.push_back(i);
  std::vector<bool> pass_flag(lat.size(), false);
  for (std::size_t i : passing) pass_flag[i] = true;

  for (std::size_t a : lat.class_representatives()) {
    if (!pass_flag[a]) continue;
    for (std::size_t b : passing) {
      if (!covers(lat, a, b)) continue;
      for (std::size_t c : passing) {
        if (!covers(lat, b, c) || !covers(lat, c, a)) continue;
        std::uint64_t oa = lat.subgroup(a).order();
        std::uint64_t ob = lat.subgroup(b).order();
        std::uint64_t oc = lat.subgroup(c).order();
        found.push_back(Factorization{a, b, c, oa < og && ob < og && oc < og});
      }
    }
  }
  return found;
}

std::vector<Perm> set_product(const Group& a, const Group& b) {
  std::unordered_set<Perm> prods;
  for (const Perm& x : a.elements())
    for (const Perm& y : b.elements()) prods.insert(compose(x, y));
  std::vector<Perm> out(prods.begin(), prods.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Group> normal_hall_subgroup(const Group& g, const std::set<int>& pi) {
  std::uint64_t target = pi_part(g.order(), pi);
  for (const Group& n : g.normal_subgroups())
    if (n.order() == target) return n;
  return std::nullopt;
}

ProductHallReport product_hall_check(const SubgroupLattice& lat, const Group& a, const Group& b,
                                     const std::set<int>& pi) {
  ProductHallReport rep;
  const Group& g = lat.parent();
  if (!is_factorization(g, a, b)) {
    rep.inapplicable_reason = "G != AB";
    return rep;
  }
  if (!hall_analysis(lat, pi).dominated) {
    rep.inapplicable_reason = "G does not satisfy D_pi";
    return rep;
  }
  auto a_pi = normal_hall_subgroup(a, pi);
  auto b_pi = normal_hall_subgroup(b, pi);
  if (!a_pi || !b_pi) {
    rep.inapplicable_reason = !a_pi ? "A has no normal Hall pi-subgroup"
                                    : "B has no normal Hall pi-subgroup";
    return rep;
  }
  rep.applicable = true;

  std::vector<Perm> ab = set_product(*a_pi, *b_pi);
  std::vector<Perm> ba = set_product(*b_pi, *a_pi);
  rep.sets_equal = ab == ba;
  rep.product_size = ab.size();

  if (rep.sets_equal) {
    std::uint64_t target = pi_part(g.order(), pi);
    if (ab.size() == target) {
      // closed as a set of the right size => Hall pi-subgroup
      Group generated = group_from_elements(g.degree(), ab);
      rep.is_hall_subgroup = generated.order() == target;
    }
  }

  Group comm = commutator_group(*a_pi, *b_pi);
  rep.commutator_in_o_pi = O_pi(g, pi).contains_group(comm);
  return rep;
}

}  // namespace sgt
