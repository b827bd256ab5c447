#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgt/corpus.hpp"
#include "sgt/factor.hpp"
#include "sgt/hall.hpp"
#include "sgt/lattice.hpp"
#include "sgt/sigma.hpp"

namespace sgt {

/// Structured outcome of one theorem/lemma/counterexample check.
struct Verdict {
  enum class Kind { theorem, lemma, counterexample, selfcheck };
  enum class Conclusion { holds, fails, not_applicable };

  std::string name;
  Kind kind = Kind::theorem;
  bool hypotheses_met = false;
  Conclusion conclusion = Conclusion::not_applicable;
  std::string witnesses;
  std::string notes;
  /// False exactly when this verdict signals a violation: a proven statement
  /// with hypotheses met and conclusion failed, or a counterexample script
  /// deviating from its documented outcome.
  bool ok = true;
};

const char* to_string(Verdict::Conclusion c);

/// For every proper factorization G = AB into sigma-nilpotent subgroups and
/// every minimal normal subgroup N: if G is sigma-soluble then AN or BN is
/// sigma-nilpotent. One verdict per (A, B, N).
std::vector<Verdict> verify_theorem1(const SubgroupLattice& lat, const SigmaPartition& sigma,
                                     const std::string& group_name);

/// For every triple factorization G = AB = BC = CA into sigma-nilpotent
/// subgroups: if G satisfies D_{sigma_i} for some class of sigma(G) then G is
/// sigma-nilpotent. One verdict per triple.
std::vector<Verdict> verify_theorem2(const SubgroupLattice& lat, const SigmaPartition& sigma,
                                     const std::string& group_name);

/// For a sigma-soluble G whose sigma-Fitting subgroup is a sigma_i-group:
/// G factors into two sigma-nilpotent subgroups iff G has a sigma-nilpotent
/// Hall sigma_i'-subgroup. Both directions are evaluated and must agree.
Verdict verify_theorem3(const SubgroupLattice& lat, const SigmaPartition& sigma, int class_id,
                        const std::string& group_name);

/// Scripted counterexample: A5 with sigma = 2,3 | 5 | rest is the product of
/// two sigma-nilpotent subgroups yet not sigma-soluble, and AN = BN = A5 is
/// not sigma-nilpotent for the minimal normal subgroup N = A5.
Verdict check_example_a5();

/// Scripted counterexample: PSL(2,7) with sigma = 2 | 3,7 | rest satisfies
/// D_{sigma_1} and D_{sigma_2} and factors into two sigma-nilpotent
/// subgroups of orders 8 and 21, yet is not sigma-soluble and AN = BN = G is
/// not sigma-nilpotent for N = G.
Verdict check_example_psl27(const Group& psl27);

/// Per-group lemma battery; partition-independent lemmas run once, the rest
/// once per partition.
std::vector<Verdict> run_lemma_battery(const SubgroupLattice& lat,
                                       const std::vector<SigmaPartition>& partitions,
                                       const std::string& group_name);

/// Cross-group lemma checks (direct products of sigma-soluble groups stay
/// sigma-soluble), gated by combined order.
std::vector<Verdict> run_direct_product_battery(const std::vector<CorpusEntry>& corpus,
                                                const std::vector<SigmaPartition>& partitions,
                                                std::uint64_t order_limit);

struct SweepOptions {
  std::uint64_t max_order = kLatticeOrderLimit;
  std::uint64_t lattice_limit = kLatticeOrderLimit;
  int threads = 1;
};

struct SweepResult {
  std::vector<Verdict> verdicts;
  std::vector<std::string> skipped;  // "NAME (order N > M)" lines
  bool all_ok = true;
};

/// Full verification sweep: per-group theorem checks and lemma battery over
/// every partition, the two counterexample scripts (when their groups are in
/// the corpus), and the cross-group direct-product battery. Deterministic
/// verdict order regardless of thread count.
SweepResult run_verification(const std::vector<CorpusEntry>& corpus,
                             const std::vector<SigmaPartition>& partitions,
                             const SweepOptions& options);

}  // namespace sgt
