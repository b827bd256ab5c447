#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgt/corpus.hpp"
#include "sgt/report.hpp"
#include "sgt/theorems.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

std::vector<sgt::SigmaPartition> default_partitions() {
  return {
      sgt::SigmaPartition::prime_wise(),
      sgt::SigmaPartition::single_class(),
      sgt::SigmaPartition::parse("2,3|5|rest"),
      sgt::SigmaPartition::parse("2|3,7|rest"),
  };
}

int run_analyze(const std::string& group_spec, const std::string& sigma_spec,
                std::uint64_t lattice_threshold) {
  sgt::SigmaPartition sigma = sgt::SigmaPartition::parse(sigma_spec);

  std::vector<sgt::CorpusEntry> entries;
  if (auto entry = sgt::find_entry(sgt::builtin_corpus(), group_spec)) {
    entries.push_back(*entry);
  } else {
    entries = sgt::load_corpus_file(group_spec);
  }
  for (const sgt::CorpusEntry& e : entries) {
    sgt::Group g = sgt::build_checked(e);
    std::cout << sgt::render_analysis(g, e.name, sigma, lattice_threshold);
  }
  return kExitOk;
}

int run_verify(const std::string& corpus_path, const std::vector<std::string>& sigma_specs,
               std::uint64_t max_order, std::uint64_t lattice_threshold, int threads,
               const std::string& out_path) {
  std::vector<sgt::CorpusEntry> corpus =
      corpus_path.empty() ? sgt::builtin_corpus() : sgt::load_corpus_file(corpus_path);

  std::vector<sgt::SigmaPartition> partitions;
  if (sigma_specs.empty()) {
    partitions = default_partitions();
  } else {
    for (const std::string& s : sigma_specs) partitions.push_back(sgt::SigmaPartition::parse(s));
  }

  sgt::SweepOptions options;
  options.max_order = max_order;
  options.lattice_limit = lattice_threshold;
  options.threads = threads;

  sgt::SweepResult result = sgt::run_verification(corpus, partitions, options);

  std::vector<std::string> names;
  names.reserve(corpus.size());
  for (const auto& e : corpus) names.push_back(e.name);

  std::cout << sgt::render_text_report(result, names, partitions);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write report to " << out_path << "\n";
      return kExitInputError;
    }
    out << sgt::render_json_report(result, names, partitions);
  }
  return result.all_ok ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sigma-groups: finite permutation-group engine for sigma-arithmetic "
               "predicates, Hall analysis, factorization search and verification"};
  app.require_subcommand(1);

  std::string group_spec;
  std::string sigma_spec = "rest";
  std::string corpus_path;
  std::vector<std::string> sigma_specs;
  std::uint64_t max_order = sgt::kLatticeOrderLimit;
  std::uint64_t lattice_threshold = sgt::kLatticeOrderLimit;
  int threads = 1;
  std::string out_path;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "analyze one group (or every entry of a corpus file) under a partition");
  analyze->add_option("--group", group_spec, "built-in group name or corpus file path")
      ->required();
  analyze->add_option("--sigma", sigma_spec,
                      "partition string, e.g. \"2,3|5|rest\" or \"primewise\"");
  analyze->add_option("--lattice-threshold", lattice_threshold,
                      "largest group order for subgroup-lattice enumeration");

  CLI::App* verify = app.add_subcommand(
      "verify", "run the theorem sweep, lemma battery and counterexample scripts");
  verify->add_option("--corpus", corpus_path, "corpus file (defaults to the built-in corpus)");
  verify->add_option("--sigma", sigma_specs,
                     "partition string (repeatable; defaults to primewise, rest, "
                     "2,3|5|rest and 2|3,7|rest)");
  verify->add_option("--max-order", max_order, "skip corpus groups above this order");
  verify->add_option("--lattice-threshold", lattice_threshold,
                     "largest group order for subgroup-lattice enumeration");
  verify->add_option("--threads", threads, "worker threads for the per-group sweep");
  verify->add_option("--out", out_path, "write the machine-readable JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (analyze->parsed()) return run_analyze(group_spec, sigma_spec, lattice_threshold);
    return run_verify(corpus_path, sigma_specs, max_order, lattice_threshold, threads, out_path);
  } catch (const sgt::parse_error& e) {
    std::cerr << "parse error at offset " << e.offset << ": " << e.what() << "\n";
    return kExitInputError;
  } catch (const sgt::threshold_exceeded& e) {
    std::cerr << "threshold exceeded: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
