#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sgt/sigma.hpp"
#include "sgt/theorems.hpp"

namespace sgt {

/// Renders the verdict list as a deterministic plain-text report: one line
/// per verdict plus a summary block. Contains no timings or thread counts.
std::string render_text_report(const SweepResult& result,
                               const std::vector<std::string>& corpus_names,
                               const std::vector<SigmaPartition>& partitions);

/// Machine-readable JSON document; schema documented in the README.
std::string render_json_report(const SweepResult& result,
                               const std::vector<std::string>& corpus_names,
                               const std::vector<SigmaPartition>& partitions);

/// Full single-group analysis: order, prime sets, chief series with
/// sigma-centrality, the sigma predicates, F_sigma, R_sigma, complete Hall
/// sigma-set and per-class D-property.
std::string render_analysis(const Group& g, const std::string& name,
                            const SigmaPartition& sigma, std::uint64_t lattice_limit);

}  // namespace sgt
