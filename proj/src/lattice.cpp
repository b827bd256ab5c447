#include "sgt/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace sgt {

namespace {

bool group_less(const Group& x, const Group& y) {
  if (x.order() != y.order()) return x.order() < y.order();
  return x.elements() < y.elements();
}

}  // namespace

// --- SubgroupLattice ---------------------------------------------------------

SubgroupLattice SubgroupLattice::enumerate(const Group& g, std::uint64_t order_limit) {
  if (g.order() > order_limit)
    throw threshold_exceeded("subgroup lattice: order " + std::to_string(g.order()) +
                             " exceeds limit " + std::to_string(order_limit));
  SubgroupLattice lat(g);

  std::vector<Group> subs;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_key;
  auto lookup = [&](const Group& h) -> std::optional<std::size_t> {
    auto it = by_key.find(h.element_set_key());
    if (it == by_key.end()) return std::nullopt;
    for (std::size_t idx : it->second)
      if (subs[idx].same_group_as(h)) return idx;
    return std::nullopt;
  };
  auto insert = [&](Group h) -> bool {
    if (lookup(h)) return false;
    by_key[h.element_set_key()].push_back(subs.size());
    subs.push_back(std::move(h));
    return true;
  };

  insert(Group::trivial(g.degree()));
  for (const Perm& x : g.elements())
    if (!x.is_identity()) insert(Group(g.degree(), {x}));

  // join pairs to a fixpoint; each round pairs the previous frontier with
  // everything known so far
  std::size_t frontier_begin = 0;
  while (frontier_begin < subs.size()) {
    std::size_t frontier_end = subs.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (subs[i].contains_group(subs[j]) || subs[j].contains_group(subs[i])) continue;
        insert(join(g, subs[i], subs[j]));
      }
    }
    frontier_begin = frontier_end;
  }

  std::sort(subs.begin(), subs.end(), group_less);
  lat.subgroups_ = std::move(subs);

  // rebuild key map against the sorted order
  by_key.clear();
  for (std::size_t i = 0; i < lat.subgroups_.size(); ++i)
    by_key[lat.subgroups_[i].element_set_key()].push_back(i);
  auto find_sorted = [&](const Group& h) -> std::size_t {
    auto it = by_key.find(h.element_set_key());
    if (it != by_key.end())
      for (std::size_t idx : it->second)
        if (lat.subgroups_[idx].same_group_as(h)) return idx;
    throw std::logic_error("subgroup lattice: conjugate fell outside the lattice");
  };

  // normality and conjugation orbits under the parent's generators
  std::size_t n = lat.subgroups_.size();
  lat.normal_.assign(n, false);
  lat.class_of_.assign(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    if (lat.class_of_[i] != SIZE_MAX) continue;
    std::size_t cls = lat.classes_.size();
    std::vector<std::size_t> orbit{i};
    lat.class_of_[i] = cls;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const Perm& x : g.generators()) {
        std::size_t img = find_sorted(conjugate_group(lat.subgroups_[orbit[k]], x));
        if (lat.class_of_[img] == SIZE_MAX) {
          lat.class_of_[img] = cls;
          orbit.push_back(img);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    lat.classes_.push_back(std::move(orbit));
  }
  for (std::size_t i = 0; i < n; ++i) lat.normal_[i] = lat.classes_[lat.class_of_[i]].size() == 1;

  lat.meet_order_.assign(n * (n + 1) / 2, -1);
  return lat;
}

std::vector<std::size_t> SubgroupLattice::class_representatives() const {
  std::vector<std::size_t> reps;
  reps.reserve(classes_.size());
  for (const auto& cls : classes_) reps.push_back(cls.front());
  std::sort(reps.begin(), reps.end());
  return reps;
}

std::optional<std::size_t> SubgroupLattice::index_of(const Group& h) const {
  for (std::size_t i = 0; i < subgroups_.size(); ++i)
    if (subgroups_[i].same_group_as(h)) return i;
  return std::nullopt;
}

std::uint64_t SubgroupLattice::intersection_order(std::size_t i, std::size_t j) const {
  if (i < j) std::swap(i, j);
  std::size_t slot = i * (i + 1) / 2 + j;
  if (meet_order_[slot] < 0) {
    if (i == j) {
      meet_order_[slot] = static_cast<std::int64_t>(subgroups_[i].order());
    } else {
      const Group& small =
          subgroups_[i].order() <= subgroups_[j].order() ? subgroups_[i] : subgroups_[j];
      const Group& large =
          subgroups_[i].order() <= subgroups_[j].order() ? subgroups_[j] : subgroups_[i];
      std::uint64_t count = 0;
      for (const Perm& x : small.elements())
        if (large.contains(x)) ++count;
      meet_order_[slot] = static_cast<std::int64_t>(count);
    }
  }
  return static_cast<std::uint64_t>(meet_order_[slot]);
}

std::vector<std::size_t> SubgroupLattice::subgroups_within(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < subgroups_.size(); ++j)
    if (subgroups_[j].order() <= subgroups_[i].order() &&
        subgroups_[i].contains_group(subgroups_[j]))
      out.push_back(j);
  return out;
}

// --- normal structure --------------------------------------------------------

const std::vector<Group>& normal_subgroups(const Group& g) { return g.normal_subgroups(); }

std::vector<Group> minimal_normal_subgroups(const Group& g) {
  if (g.is_trivial()) throw precondition_error("minimal_normal_subgroups: group is trivial");
  const std::vector<Group>& normals = g.normal_subgroups();
  std::vector<Group> result;
  for (const Group& n : normals) {
    if (n.is_trivial()) continue;
    bool minimal = true;
    for (const Group& m : normals) {
      if (m.is_trivial() || m.order() >= n.order()) continue;
      if (n.contains_group(m)) {
        minimal = false;
        break;
      }
    }
    if (minimal) result.push_back(n);
  }
  return result;
}

std::vector<ChiefFactor> chief_series(const Group& g, TieBreak tie_break) {
  if (g.is_trivial()) return {};
  const std::vector<Group>& normals = g.normal_subgroups();
  std::vector<ChiefFactor> series;
  Group current = Group::trivial(g.degree());
  while (current.order() < g.order()) {
    // candidates: normal M > current with no normal strictly between
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < normals.size(); ++i) {
      const Group& m = normals[i];
      if (m.order() <= current.order() || !m.contains_group(current)) continue;
      bool covers = true;
      for (const Group& k : normals) {
        if (k.order() <= current.order() || k.order() >= m.order()) continue;
        if (k.contains_group(current) && m.contains_group(k) && k.order() > current.order()) {
          covers = false;
          break;
        }
      }
      if (!covers) continue;
      if (!best) {
        best = i;
        continue;
      }
      const Group& b = normals[*best];
      bool prefer;
      if (tie_break == TieBreak::smallest_first)
        prefer = group_less(m, b);
      else
        prefer = group_less(b, m);
      if (prefer) best = i;
    }
    if (!best) throw std::logic_error("chief_series: no covering normal subgroup found");
    const Group& next = normals[*best];
    Group cent = centralizer_of_chief_factor(g, current, next);
    std::uint64_t forder = next.order() / current.order();
    std::uint64_t cindex = g.order() / cent.order();
    series.push_back(ChiefFactor{current, next, forder, std::move(cent), cindex});
    current = next;
  }
  return series;
}

Group centralizer_of_chief_factor(const Group& g, const Group& below, const Group& above) {
  std::vector<Perm> kept;
  for (const Perm& x : g.elements()) {
    bool central = true;
    for (const Perm& h : above.generators()) {
      if (!below.contains(commutator(x, h))) {
        central = false;
        break;
      }
    }
    if (central) kept.push_back(x);
  }
  return group_from_elements(g.degree(), kept);
}

// --- quotients ----------------------------------------------------------------

Group quotient(const Group& g, const Group& n) {
  if (!g.contains_group(n)) throw precondition_error("quotient: N is not contained in G");
  for (const Perm& x : g.generators())
    for (const Perm& m : n.generators())
      if (!n.contains(conjugate(m, x))) throw precondition_error("quotient: N is not normal in G");

  // canonical coset labels: the lexicographically least element of each coset
  const std::vector<Perm>& els = g.elements();
  const std::vector<Perm>& nels = n.elements();
  std::map<Perm, std::size_t> coset_of;  // least element -> coset index
  std::vector<Perm> reps;
  auto least_in_coset = [&](const Perm& y) {
    // min over n*y (right coset N y)
    Perm best = y;
    for (const Perm& m : nels) {
      Perm cand = compose(m, y);
      if (cand < best) best = cand;
    }
    return best;
  };
  for (const Perm& y : els) {
    Perm key = least_in_coset(y);
    if (!coset_of.count(key)) {
      std::size_t idx = coset_of.size();
      coset_of.emplace(key, idx);
      reps.push_back(key);
    }
  }
  // map is ordered, but insertion followed points in canonical element order,
  // so indices are already assigned by ascending least representative
  std::size_t index = coset_of.size();
  if (index != g.order() / n.order()) throw std::logic_error("quotient: coset count mismatch");

  int qdeg = static_cast<int>(index);
  if (qdeg == 1) return Group::trivial(1);
  std::vector<Perm> qgens;
  for (const Perm& x : g.generators()) {
    std::vector<int> img(index);
    for (std::size_t c = 0; c < index; ++c) {
      Perm moved = least_in_coset(compose(reps[c], x));
      img[c] = static_cast<int>(coset_of.at(moved)) + 1;
    }
    qgens.emplace_back(std::move(img));
  }
  Group q(qdeg, std::move(qgens));
  if (q.order() != g.order() / n.order())
    throw std::logic_error("quotient: order mismatch after coset action");
  return q;
}

std::vector<std::uint64_t> element_order_profile(const Group& g) {
  std::vector<std::uint64_t> orders;
  orders.reserve(g.elements().size());
  for (const Perm& p : g.elements()) orders.push_back(p.order());
  std::sort(orders.begin(), orders.end());
  return orders;
}

}  // namespace sgt
