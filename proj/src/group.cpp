#include "sgt/group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_set>

namespace sgt {

// --- StabilizerChain -------------------------------------------------------

StabilizerChain::StabilizerChain(int degree, const std::vector<Perm>& gens)
    : degree_(degree) {
  std::vector<Perm> seed;
  for (const Perm& g : gens) {
    if (g.degree() != degree_) throw degree_mismatch("generator degree mismatch");
    if (!g.is_identity()) seed.push_back(g);
  }
  if (seed.empty()) return;  // trivial group: empty chain
  ChainLevel lv;
  lv.base_point = seed.front().smallest_moved_point();
  levels_.push_back(std::move(lv));
  levels_[0].gens = std::move(seed);
  recompute_orbit(0);
  close_level(0);
}

void StabilizerChain::recompute_orbit(std::size_t level) {
  ChainLevel& lv = levels_[level];
  lv.transversal.assign(static_cast<std::size_t>(degree_), std::nullopt);
  lv.transversal[static_cast<std::size_t>(lv.base_point) - 1] = Perm(degree_);
  lv.orbit_size = 1;
  std::deque<int> queue{lv.base_point};
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    const Perm up = *lv.transversal[static_cast<std::size_t>(p) - 1];
    for (const Perm& s : lv.gens) {
      int q = s(p);
      if (!lv.transversal[static_cast<std::size_t>(q) - 1]) {
        lv.transversal[static_cast<std::size_t>(q) - 1] = compose(s, up);
        ++lv.orbit_size;
        queue.push_back(q);
      }
    }
  }
}

void StabilizerChain::add_generator(std::size_t level, const Perm& g) {
  if (level == levels_.size()) {
    ChainLevel lv;
    lv.base_point = g.smallest_moved_point();
    levels_.push_back(std::move(lv));
  }
  levels_[level].gens.push_back(g);
  recompute_orbit(level);
}

// Re-establishes the Schreier condition at `level`, assuming every deeper
// level is already closed. A failing Schreier generator's sift residue fixes
// the base points of all levels it passed, so it is a legitimate generator
// for every level between here and where the sift stopped; it is added to
// all of them and the touched levels are re-closed deepest-first.
void StabilizerChain::close_level(std::size_t level) {
  bool stable = false;
  while (!stable) {
    stable = true;
    ChainLevel& lv = levels_[level];
    for (int p = 1; p <= degree_ && stable; ++p) {
      if (!lv.transversal[static_cast<std::size_t>(p) - 1]) continue;
      const Perm up = *lv.transversal[static_cast<std::size_t>(p) - 1];
      for (const Perm& s : lv.gens) {
        int q = s(p);
        const Perm& uq = *lv.transversal[static_cast<std::size_t>(q) - 1];
        Perm res = compose(uq.inverse(), compose(s, up));
        if (res.is_identity()) continue;
        std::size_t j = level + 1;
        for (; j < levels_.size(); ++j) {
          int img = res(levels_[j].base_point);
          const auto& t = levels_[j].transversal[static_cast<std::size_t>(img) - 1];
          if (!t) break;
          res = compose(t->inverse(), res);
        }
        if (res.is_identity()) continue;
        for (std::size_t l = level + 1; l <= j; ++l) add_generator(l, res);
        for (std::size_t l = j; l > level; --l) close_level(l);
        stable = false;
        break;
      }
    }
  }
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t n = 1;
  for (const ChainLevel& lv : levels_) n *= lv.orbit_size;
  return n;
}

Perm StabilizerChain::sift(const Perm& p) const {
  Perm res = p;
  for (const ChainLevel& lv : levels_) {
    int img = res(lv.base_point);
    const auto& t = lv.transversal[static_cast<std::size_t>(img) - 1];
    if (!t) return res;
    res = compose(t->inverse(), res);
  }
  return res;
}

bool StabilizerChain::contains(const Perm& p) const {
  return sift(p).is_identity();
}

std::vector<Perm> StabilizerChain::enumerate(std::size_t limit) const {
  if (order() > limit)
    throw threshold_exceeded("element enumeration: order " + std::to_string(order()) +
                             " exceeds limit " + std::to_string(limit));
  std::vector<Perm> out{Perm(degree_)};
  // transversal-product expansion, bottom level first
  for (std::size_t li = levels_.size(); li-- > 0;) {
    const ChainLevel& lv = levels_[li];
    std::vector<Perm> next;
    next.reserve(out.size() * lv.orbit_size);
    for (int p = 1; p <= degree_; ++p) {
      const auto& t = lv.transversal[static_cast<std::size_t>(p) - 1];
      if (!t) continue;
      for (const Perm& rest : out) next.push_back(compose(*t, rest));
    }
    out = std::move(next);
  }
  return out;
}

// --- Group -----------------------------------------------------------------

struct Group::Impl {
  int degree;
  std::vector<Perm> gens;
  StabilizerChain chain;

  mutable std::once_flag elements_once;
  mutable std::vector<Perm> elements_cache;

  mutable std::once_flag normals_once;
  mutable std::vector<Group> normals_cache;

  mutable std::once_flag key_once;
  mutable std::uint64_t key_cache = 0;

  Impl(int d, std::vector<Perm> g) : degree(d), gens(std::move(g)), chain(d, gens) {}
};

Group::Group(int degree, std::vector<Perm> generators) {
  if (degree < 1) throw std::invalid_argument("group degree must be >= 1");
  std::vector<Perm> cleaned;
  for (Perm& g : generators) {
    if (g.degree() != degree) throw degree_mismatch("generator degree mismatch");
    if (g.is_identity()) continue;
    if (std::find(cleaned.begin(), cleaned.end(), g) == cleaned.end())
      cleaned.push_back(std::move(g));
  }
  impl_ = std::make_shared<const Impl>(degree, std::move(cleaned));
}

int Group::degree() const { return impl_->degree; }
std::uint64_t Group::order() const { return impl_->chain.order(); }
const std::vector<Perm>& Group::generators() const { return impl_->gens; }
const StabilizerChain& Group::chain() const { return impl_->chain; }

bool Group::contains(const Perm& p) const {
  if (p.degree() != degree()) throw degree_mismatch("membership test: degree mismatch");
  return impl_->chain.contains(p);
}

bool Group::contains_group(const Group& h) const {
  if (h.degree() != degree()) throw degree_mismatch("containment test: degree mismatch");
  if (h.order() > order()) return false;
  for (const Perm& g : h.generators())
    if (!contains(g)) return false;
  return true;
}

bool Group::same_group_as(const Group& h) const {
  return order() == h.order() && contains_group(h);
}

const std::vector<Perm>& Group::elements(std::size_t limit) const {
  if (order() > limit)
    throw threshold_exceeded("element enumeration: order " + std::to_string(order()) +
                             " exceeds limit " + std::to_string(limit));
  std::call_once(impl_->elements_once, [&] {
    std::vector<Perm> els = impl_->chain.enumerate(limit);
    std::sort(els.begin(), els.end());
    impl_->elements_cache = std::move(els);
  });
  return impl_->elements_cache;
}

std::uint64_t Group::element_set_key() const {
  std::call_once(impl_->key_once, [&] {
    std::uint64_t h = 1469598103934665603ull;
    for (const Perm& p : elements()) {
      h ^= perm_hash(p);
      h *= 1099511628211ull;
    }
    impl_->key_cache = h ^ order();
  });
  return impl_->key_cache;
}

// --- constructions ---------------------------------------------------------

Group group_from_elements(int degree, const std::vector<Perm>& elems) {
  std::vector<Perm> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Perm> gens;
  Group current = Group::trivial(degree);
  for (const Perm& p : sorted) {
    if (!current.contains(p)) {
      gens.push_back(p);
      current = Group(degree, gens);
    }
  }
  if (current.order() != sorted.size())
    throw std::logic_error("group_from_elements: input set is not a subgroup");
  return current;
}

Group normal_closure(const Group& g, const Group& s) {
  if (!g.contains_group(s)) throw precondition_error("normal_closure: S is not contained in G");
  std::vector<Perm> gens = s.generators();
  Group closure(g.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {  // gens grows while iterating
    for (const Perm& x : g.generators()) {
      Perm c = conjugate(gens[i], x);
      if (!closure.contains(c)) {
        gens.push_back(c);
        closure = Group(g.degree(), gens);
      }
    }
  }
  return closure;
}

Group centralizer(const Group& g, const Group& h) {
  if (g.degree() != h.degree()) throw degree_mismatch("centralizer: degree mismatch");
  std::vector<Perm> kept;
  for (const Perm& x : g.elements()) {
    bool commutes = true;
    for (const Perm& hg : h.generators()) {
      if (compose(x, hg) != compose(hg, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) kept.push_back(x);
  }
  return group_from_elements(g.degree(), kept);
}

Group core(const Group& g, const Group& b) {
  if (!g.contains_group(b)) throw precondition_error("core: B is not contained in G");
  // Largest subset of B stable under conjugation by G's generators; the
  // fixpoint equals the intersection of all G-conjugates of B.
  std::unordered_set<Perm> keep(b.elements().begin(), b.elements().end());
  bool removed = true;
  while (removed) {
    removed = false;
    for (auto it = keep.begin(); it != keep.end();) {
      bool stays = true;
      for (const Perm& x : g.generators()) {
        if (!keep.count(conjugate(*it, x))) {
          stays = false;
          break;
        }
      }
      if (!stays) {
        it = keep.erase(it);
        removed = true;
      } else {
        ++it;
      }
    }
  }
  return group_from_elements(g.degree(), std::vector<Perm>(keep.begin(), keep.end()));
}

Group intersect(const Group& a, const Group& b) {
  if (a.degree() != b.degree()) throw degree_mismatch("intersect: degree mismatch");
  const Group& small = a.order() <= b.order() ? a : b;
  const Group& large = a.order() <= b.order() ? b : a;
  std::vector<Perm> kept;
  for (const Perm& x : small.elements())
    if (large.contains(x)) kept.push_back(x);
  return group_from_elements(a.degree(), kept);
}

Group join(const Group& g, const Group& a, const Group& b) {
  if (!g.contains_group(a) || !g.contains_group(b))
    throw precondition_error("join: operand not contained in G");
  std::vector<Perm> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Group(g.degree(), std::move(gens));
}

Group conjugate_group(const Group& h, const Perm& x) {
  std::vector<Perm> gens;
  gens.reserve(h.generators().size());
  for (const Perm& g : h.generators()) gens.push_back(conjugate(g, x));
  return Group(h.degree(), std::move(gens));
}

Group commutator_group(const Group& a, const Group& b) {
  if (a.degree() != b.degree()) throw degree_mismatch("commutator_group: degree mismatch");
  std::unordered_set<Perm> comms;
  for (const Perm& x : a.elements())
    for (const Perm& y : b.elements()) comms.insert(commutator(x, y));
  // commutators need not form a subgroup; close the generated group
  std::vector<Perm> gens(comms.begin(), comms.end());
  std::sort(gens.begin(), gens.end());
  return Group(a.degree(), std::move(gens));
}

Group direct_product(const Group& a, const Group& b) {
  int d = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const Perm& g : a.generators()) {
    std::vector<int> img(static_cast<std::size_t>(d));
    for (int i = 1; i <= a.degree(); ++i) img[static_cast<std::size_t>(i) - 1] = g(i);
    for (int i = a.degree() + 1; i <= d; ++i) img[static_cast<std::size_t>(i) - 1] = i;
    gens.emplace_back(std::move(img));
  }
  for (const Perm& g : b.generators()) {
    std::vector<int> img(static_cast<std::size_t>(d));
    for (int i = 1; i <= a.degree(); ++i) img[static_cast<std::size_t>(i) - 1] = i;
    for (int i = 1; i <= b.degree(); ++i)
      img[static_cast<std::size_t>(a.degree() + i) - 1] = a.degree() + g(i);
    gens.emplace_back(std::move(img));
  }
  return Group(d, std::move(gens));
}

// --- normal subgroups ------------------------------------------------------

namespace {

// Every normal subgroup is a join of normal closures of cyclic subgroups, so
// the join-closure of those closures enumerates the normal lattice exactly.
std::vector<Group> compute_normal_subgroups(const Group& g) {
  std::vector<Group> normals{Group::trivial(g.degree())};
  auto known = [&](const Group& h) {
    for (const Group& n : normals)
      if (n.same_group_as(h)) return true;
    return false;
  };

  std::vector<Group> cyclic;
  for (const Perm& x : g.elements()) {
    if (x.is_identity()) continue;
    bool seen = false;
    for (const Group& c : cyclic)
      if (c.order() == x.order() && c.contains(x)) {
        seen = true;
        break;
      }
    if (!seen) cyclic.push_back(Group(g.degree(), {x}));
  }
  for (const Group& c : cyclic) {
    Group n = normal_closure(g, c);
    if (!known(n)) normals.push_back(std::move(n));
  }

  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t count = normals.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        if (normals[i].contains_group(normals[j]) || normals[j].contains_group(normals[i]))
          continue;
        Group jn = join(g, normals[i], normals[j]);
        if (!known(jn)) {
          normals.push_back(std::move(jn));
          grew = true;
        }
      }
    }
  }

  std::sort(normals.begin(), normals.end(), [](const Group& x, const Group& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.elements() < y.elements();
  });
  return normals;
}

}  // namespace

const std::vector<Group>& Group::normal_subgroups() const {
  std::call_once(impl_->normals_once, [&] {
    impl_->normals_cache = compute_normal_subgroups(*this);
  });
  return impl_->normals_cache;
}

}  // namespace sgt
