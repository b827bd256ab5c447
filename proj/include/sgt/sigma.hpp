#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sgt/group.hpp"
#include "sgt/lattice.hpp"

namespace sgt {

/// Thrown when a prime falls in no class of a partition without a residual
/// class.
struct partition_incomplete : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Set of all primes dividing n (trial division; empty for n = 1).
std::vector<int> prime_set(std::uint64_t n);

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, int p);

/// Product of p_part(n, p) over p in pi.
std::uint64_t pi_part(std::uint64_t n, const std::set<int>& pi);

/// A partition of the primes: finitely many explicit disjoint classes plus an
/// optional residual class holding every remaining prime. The prime-wise
/// partition (every prime its own class) is a distinguished kind.
///
/// Class identifiers: 0..k-1 for the explicit classes, k for the residual
/// class; under the prime-wise partition the identifier of p's class is p.
class SigmaPartition {
 public:
  /// Grammar: classes separated by '|', primes by ',', literal "rest" for the
  /// residual class ("2,3|5|rest"). "primewise" selects the prime-wise
  /// partition.
  static SigmaPartition parse(std::string_view text);

  static SigmaPartition prime_wise();
  static SigmaPartition single_class();  // just the residual class
  static SigmaPartition make(std::vector<std::vector<int>> classes, bool residual);

  bool is_prime_wise() const { return prime_wise_; }
  bool has_residual() const { return residual_; }
  std::size_t explicit_class_count() const { return classes_.size(); }
  int residual_id() const { return static_cast<int>(classes_.size()); }

  /// Identifier of the class containing p; throws partition_incomplete when p
  /// is unassigned and there is no residual class.
  int class_of_prime(int p) const;

  /// sigma(n): identifiers of the classes meeting the prime set of n.
  std::set<int> signature(std::uint64_t n) const;
  std::set<int> signature_of_group(const Group& g) const { return signature(g.order()); }

  /// The primes of `within` lying in class id.
  std::set<int> class_primes_within(int id, const std::set<int>& within) const;

  /// Display name of a class, e.g. "{2,3}", "{7}", "rest".
  std::string class_name(int id) const;

  /// Canonical partition string (round-trips through parse).
  std::string to_string() const;

  /// True when every class of this partition is contained in a class of
  /// coarser (restricted to the primes `within`, which is enough for groups
  /// whose orders only involve those primes).
  bool refines(const SigmaPartition& coarser, const std::set<int>& within) const;

 private:
  SigmaPartition() = default;
  std::vector<std::vector<int>> classes_;  // each sorted ascending
  bool residual_ = false;
  bool prime_wise_ = false;
};

// --- predicates -------------------------------------------------------------

/// |sigma(|G|)| <= 1.
bool is_sigma_primary(const Group& g, const SigmaPartition& sigma);
bool is_sigma_primary_order(std::uint64_t n, const SigmaPartition& sigma);

/// The chief factor above/below is sigma-central in g: the order
/// |above/below| * |g : C_g(above/below)| is sigma-primary. (The semidirect
/// product in the definition has exactly that order, so it is never built.)
bool is_sigma_central(const Group& g, const ChiefFactor& f, const SigmaPartition& sigma);

/// Every chief factor is sigma-central (definitional route).
bool is_sigma_nilpotent(const Group& g, const SigmaPartition& sigma);

/// Direct-product-of-Hall-subgroups route: a complete Hall sigma-set exists
/// whose members are all normal, pairwise intersect trivially, pairwise
/// commute elementwise, and whose orders multiply to |G|.
bool is_sigma_nilpotent_hall(const Group& g, const SigmaPartition& sigma);

/// Every chief factor order is sigma-primary.
bool is_sigma_soluble(const Group& g, const SigmaPartition& sigma);

/// Largest normal pi-subgroup (join of all normal pi-subgroups).
Group O_pi(const Group& g, const std::set<int>& pi);

/// Join of all normal sigma-nilpotent subgroups; checked to be
/// sigma-nilpotent itself before returning.
Group sigma_fitting(const Group& g, const SigmaPartition& sigma);

/// Join of all normal sigma-soluble subgroups; checked sigma-soluble.
Group sigma_radical(const Group& g, const SigmaPartition& sigma);

}  // namespace sgt
