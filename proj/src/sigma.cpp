#include "sgt/sigma.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sgt {

std::vector<int> prime_set(std::uint64_t n) {
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

std::uint64_t p_part(std::uint64_t n, int p) {
  std::uint64_t part = 1;
  while (n % static_cast<std::uint64_t>(p) == 0) {
    part *= static_cast<std::uint64_t>(p);
    n /= static_cast<std::uint64_t>(p);
  }
  return part;
}

std::uint64_t pi_part(std::uint64_t n, const std::set<int>& pi) {
  std::uint64_t part = 1;
  for (int p : pi) part *= p_part(n, p);
  return part;
}

namespace {

bool is_prime(long v) {
  if (v < 2) return false;
  for (long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

}  // namespace

// --- SigmaPartition ----------------------------------------------------------

SigmaPartition SigmaPartition::prime_wise() {
  SigmaPartition s;
  s.prime_wise_ = true;
  return s;
}

SigmaPartition SigmaPartition::single_class() {
  SigmaPartition s;
  s.residual_ = true;
  return s;
}

SigmaPartition SigmaPartition::make(std::vector<std::vector<int>> classes, bool residual) {
  SigmaPartition s;
  std::set<int> seen;
  for (auto& cls : classes) {
    if (cls.empty()) throw std::invalid_argument("sigma partition: empty class");
    std::sort(cls.begin(), cls.end());
    for (int p : cls) {
      if (!is_prime(p)) throw std::invalid_argument("sigma partition: " + std::to_string(p) + " is not prime");
      if (!seen.insert(p).second)
        throw std::invalid_argument("sigma partition: prime " + std::to_string(p) + " in two classes");
    }
  }
  if (classes.empty() && !residual)
    throw std::invalid_argument("sigma partition: no classes");
  s.classes_ = std::move(classes);
  s.residual_ = residual;
  return s;
}

SigmaPartition SigmaPartition::parse(std::string_view text) {
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  if (trimmed == "primewise") return prime_wise();
  if (trimmed.empty()) throw parse_error("empty partition string", 0);

  std::vector<std::vector<int>> classes;
  bool residual = false;
  std::size_t pos = 0;
  while (pos <= trimmed.size()) {
    std::size_t bar = trimmed.find('|', pos);
    std::string token = trimmed.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
    if (token.empty()) throw parse_error("empty partition class", pos);
    if (token == "rest") {
      if (residual) throw parse_error("duplicate \"rest\" class", pos);
      residual = true;
    } else {
      std::vector<int> cls;
      std::size_t tp = 0;
      while (tp < token.size()) {
        std::size_t comma = token.find(',', tp);
        std::string num = token.substr(tp, comma == std::string::npos ? std::string::npos : comma - tp);
        if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) {
              return std::isdigit(static_cast<unsigned char>(c));
            }))
          throw parse_error("expected a prime number, got \"" + num + "\"", pos + tp);
        long v = std::stol(num);
        if (!is_prime(v)) throw parse_error(std::to_string(v) + " is not prime", pos + tp);
        cls.push_back(static_cast<int>(v));
        if (comma == std::string::npos) break;
        tp = comma + 1;
      }
      classes.push_back(std::move(cls));
    }
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  try {
    return make(std::move(classes), residual);
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what(), 0);
  }
}

int SigmaPartition::class_of_prime(int p) const {
  if (prime_wise_) return p;
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (std::binary_search(classes_[i].begin(), classes_[i].end(), p))
      return static_cast<int>(i);
  if (residual_) return residual_id();
  throw partition_incomplete("prime " + std::to_string(p) +
                             " lies in no class of partition " + to_string());
}

std::set<int> SigmaPartition::signature(std::uint64_t n) const {
  std::set<int> ids;
  for (int p : prime_set(n)) ids.insert(class_of_prime(p));
  return ids;
}

std::set<int> SigmaPartition::class_primes_within(int id, const std::set<int>& within) const {
  std::set<int> out;
  for (int p : within)
    if (class_of_prime(p) == id) out.insert(p);
  return out;
}

std::string SigmaPartition::class_name(int id) const {
  if (prime_wise_) return "{" + std::to_string(id) + "}";
  if (residual_ && id == residual_id()) return "rest";
  if (id < 0 || id >= static_cast<int>(classes_.size()))
    throw std::invalid_argument("unknown sigma class id " + std::to_string(id));
  std::string s = "{";
  const auto& cls = classes_[static_cast<std::size_t>(id)];
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(cls[i]);
  }
  return s + "}";
}

std::string SigmaPartition::to_string() const {
  if (prime_wise_) return "primewise";
  std::string s;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (i) s += "|";
    for (std::size_t j = 0; j < classes_[i].size(); ++j) {
      if (j) s += ",";
      s += std::to_string(classes_[i][j]);
    }
  }
  if (residual_) {
    if (!classes_.empty()) s += "|";
    s += "rest";
  }
  return s;
}

bool SigmaPartition::refines(const SigmaPartition& coarser, const std::set<int>& within) const {
  // restricted to `within`, classes here must not straddle classes of `coarser`
  for (int p : within)
    for (int q : within)
      if (class_of_prime(p) == class_of_prime(q) &&
          coarser.class_of_prime(p) != coarser.class_of_prime(q))
        return false;
  return true;
}

// --- predicates ---------------------------------------------------------------

bool is_sigma_primary_order(std::uint64_t n, const SigmaPartition& sigma) {
  return sigma.signature(n).size() <= 1;
}

bool is_sigma_primary(const Group& g, const SigmaPartition& sigma) {
  return is_sigma_primary_order(g.order(), sigma);
}

bool is_sigma_central(const Group& g, const ChiefFactor& f, const SigmaPartition& sigma) {
  (void)g;
  return is_sigma_primary_order(f.factor_order * f.centralizer_index, sigma);
}

bool is_sigma_nilpotent(const Group& g, const SigmaPartition& sigma) {
  for (const ChiefFactor& f : chief_series(g))
    if (!is_sigma_central(g, f, sigma)) return false;
  return true;
}

bool is_sigma_soluble(const Group& g, const SigmaPartition& sigma) {
  for (const ChiefFactor& f : chief_series(g))
    if (!is_sigma_primary_order(f.factor_order, sigma)) return false;
  return true;
}

bool is_sigma_nilpotent_hall(const Group& g, const SigmaPartition& sigma) {
  if (g.is_trivial()) return true;
  std::set<int> group_primes(prime_set(g.order()).begin(), prime_set(g.order()).end());
  std::set<int> classes = sigma.signature_of_group(g);
  std::vector<Group> members;
  for (int id : classes) {
    std::set<int> primes = sigma.class_primes_within(id, group_primes);
    std::uint64_t target = pi_part(g.order(), primes);
    const Group* found = nullptr;
    for (const Group& n : g.normal_subgroups()) {
      if (n.order() == target) {
        found = &n;
        break;
      }
    }
    if (!found) return false;
    members.push_back(*found);
  }
  // direct-product conditions, checked literally
  std::uint64_t prod = 1;
  for (const Group& m : members) prod *= m.order();
  if (prod != g.order()) return false;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (intersect(members[i], members[j]).order() != 1) return false;
      for (const Perm& a : members[i].generators())
        for (const Perm& b : members[j].generators())
          if (!commutator(a, b).is_identity()) return false;
    }
  }
  return true;
}

Group O_pi(const Group& g, const std::set<int>& pi) {
  Group result = Group::trivial(g.degree());
  for (const Group& n : g.normal_subgroups()) {
    if (pi_part(n.order(), pi) == n.order() && !result.contains_group(n))
      result = join(g, result, n);
  }
  // the join of normal pi-subgroups must itself be a pi-group
  if (pi_part(result.order(), pi) != result.order())
    throw std::logic_error("O_pi: join of normal pi-subgroups is not a pi-group");
  return result;
}

Group sigma_fitting(const Group& g, const SigmaPartition& sigma) {
  Group result = Group::trivial(g.degree());
  for (const Group& n : g.normal_subgroups()) {
    if (is_sigma_nilpotent(n, sigma) && !result.contains_group(n)) result = join(g, result, n);
  }
  if (!is_sigma_nilpotent(result, sigma))
    throw std::logic_error("sigma_fitting: product of normal sigma-nilpotent subgroups "
                           "is not sigma-nilpotent");
  return result;
}

Group sigma_radical(const Group& g, const SigmaPartition& sigma) {
  Group result = Group::trivial(g.degree());
  for (const Group& n : g.normal_subgroups()) {
    if (is_sigma_soluble(n, sigma) && !result.contains_group(n)) result = join(g, result, n);
  }
  if (!is_sigma_soluble(result, sigma))
    throw std::logic_error("sigma_radical: product of normal sigma-soluble subgroups "
                           "is not sigma-soluble");
  return result;
}

}  // namespace sgt
