#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace sgt::oracle {

namespace {

// closure of a generating set by repeated multiplication, no chains involved
std::vector<Perm> closure(int degree, std::vector<Perm> gens) {
  std::set<Perm> els{Perm(degree)};
  for (const Perm& g : gens) els.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> current(els.begin(), els.end());
    for (const Perm& a : current)
      for (const Perm& b : current)
        if (els.insert(compose(a, b)).second) grew = true;
  }
  return {els.begin(), els.end()};
}

std::vector<int> prime_set_of(std::uint64_t n) {
  std::vector<int> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(static_cast<int>(n));
  return primes;
}

}  // namespace

std::vector<std::vector<Perm>> subgroups_by_pair_closure(const Group& g) {
  const std::vector<Perm>& els = g.elements();
  std::set<std::vector<Perm>> subs;
  subs.insert(closure(g.degree(), {}));
  for (const Perm& x : els)
    for (const Perm& y : els) subs.insert(closure(g.degree(), {x, y}));

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Perm>> current(subs.begin(), subs.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<Perm> gens = current[i];
        gens.insert(gens.end(), current[j].begin(), current[j].end());
        if (subs.insert(closure(g.degree(), std::move(gens))).second) grew = true;
      }
    }
  }
  return {subs.begin(), subs.end()};
}

bool nilpotent_by_element_orders(const Group& g) {
  std::map<int, std::uint64_t> p_element_count;
  for (const Perm& x : g.elements()) {
    std::uint64_t o = x.order();
    auto primes = prime_set_of(o);
    if (primes.size() == 1) p_element_count[primes.front()] += 1;
  }
  std::uint64_t n = g.order();
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    std::uint64_t part = 1;
    while (n % p == 0) {
      part *= p;
      n /= p;
    }
    // count includes the identity? identity has order 1, no prime: add 1
    if (p_element_count[static_cast<int>(p)] + 1 != part) return false;
  }
  return n == 1;
}

bool soluble_by_derived_series(const Group& g) {
  std::vector<Perm> current = g.elements();
  while (current.size() > 1) {
    std::unordered_set<Perm> comms;
    for (const Perm& a : current)
      for (const Perm& b : current) comms.insert(commutator(a, b));
    std::vector<Perm> derived =
        closure(g.degree(), std::vector<Perm>(comms.begin(), comms.end()));
    if (derived.size() == current.size()) return false;  // stabilized above 1
    current = std::move(derived);
  }
  return true;
}

std::vector<Perm> literal_set_product(const std::vector<Perm>& a, const std::vector<Perm>& b) {
  std::set<Perm> prods;
  for (const Perm& x : a)
    for (const Perm& y : b) prods.insert(compose(x, y));
  return {prods.begin(), prods.end()};
}

std::vector<Perm> core_by_conjugate_intersection(const Group& g, const Group& b) {
  std::set<Perm> result(b.elements().begin(), b.elements().end());
  for (const Perm& x : g.elements()) {
    std::set<Perm> conj;
    for (const Perm& e : b.elements()) conj.insert(conjugate(e, x));
    std::set<Perm> meet;
    for (const Perm& e : result)
      if (conj.count(e)) meet.insert(e);
    result = std::move(meet);
  }
  return {result.begin(), result.end()};
}

std::vector<Perm> centralizer_by_full_filter(const Group& g, const Group& h) {
  std::vector<Perm> kept;
  for (const Perm& x : g.elements()) {
    bool commutes = true;
    for (const Perm& y : h.elements()) {
      if (compose(x, y) != compose(y, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) kept.push_back(x);
  }
  return kept;
}

}  // namespace sgt::oracle
