#include "sgt/report.hpp"

#include <sstream>

#include "json.hpp"

namespace sgt {

namespace {

const char* kind_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::theorem: return "theorem";
    case Verdict::Kind::lemma: return "lemma";
    case Verdict::Kind::counterexample: return "counterexample";
    case Verdict::Kind::selfcheck: return "selfcheck";
  }
  return "?";
}

}  // namespace

std::string render_text_report(const SweepResult& result,
                               const std::vector<std::string>& corpus_names,
                               const std::vector<SigmaPartition>& partitions) {
  std::ostringstream out;
  out << "sigma-groups verification report\n";
  out << "corpus:";
  for (const auto& n : corpus_names) out << " " << n;
  out << "\npartitions:";
  for (const auto& p : partitions) out << " " << p.to_string();
  out << "\n\n";
  for (const auto& s : result.skipped) out << "skipped: " << s << "\n";
  if (!result.skipped.empty()) out << "\n";

  std::size_t violations = 0;
  std::size_t not_applicable = 0;
  for (const Verdict& v : result.verdicts) {
    if (!v.ok) ++violations;
    if (v.conclusion == Verdict::Conclusion::not_applicable) ++not_applicable;
    out << (v.ok ? "[ok]  " : "[FAIL] ") << v.name
        << " hypotheses=" << (v.hypotheses_met ? "met" : "unmet")
        << " conclusion=" << to_string(v.conclusion);
    if (!v.witnesses.empty()) out << " | " << v.witnesses;
    if (!v.notes.empty()) out << " | " << v.notes;
    out << "\n";
  }
  out << "\nsummary: " << result.verdicts.size() << " verdicts, " << violations
      << " violations, " << not_applicable << " not-applicable\n";
  out << (result.all_ok ? "VERIFICATION PASSED\n" : "VERIFICATION FAILED\n");
  return out.str();
}

std::string render_json_report(const SweepResult& result,
                               const std::vector<std::string>& corpus_names,
                               const std::vector<SigmaPartition>& partitions) {
  nlohmann::ordered_json doc;
  doc["tool"] = "sigma-groups";
  doc["corpus"] = corpus_names;
  std::vector<std::string> pstrings;
  for (const auto& p : partitions) pstrings.push_back(p.to_string());
  doc["partitions"] = pstrings;
  doc["skipped"] = result.skipped;

  nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
  std::size_t violations = 0;
  for (const Verdict& v : result.verdicts) {
    nlohmann::ordered_json jv;
    jv["name"] = v.name;
    jv["kind"] = kind_name(v.kind);
    jv["hypotheses_met"] = v.hypotheses_met;
    if (v.conclusion == Verdict::Conclusion::not_applicable)
      jv["conclusion_holds"] = nullptr;
    else
      jv["conclusion_holds"] = v.conclusion == Verdict::Conclusion::holds;
    jv["witnesses"] = v.witnesses;
    jv["notes"] = v.notes;
    jv["ok"] = v.ok;
    verdicts.push_back(std::move(jv));
    if (!v.ok) ++violations;
  }
  doc["verdicts"] = std::move(verdicts);
  doc["summary"] = {{"total", result.verdicts.size()},
                    {"violations", violations},
                    {"passed", result.all_ok}};
  return doc.dump(2) + "\n";
}

std::string render_analysis(const Group& g, const std::string& name,
                            const SigmaPartition& sigma, std::uint64_t lattice_limit) {
  std::ostringstream out;
  out << "group " << name << "\n";
  out << "  order: " << g.order() << "\n";

  out << "  pi(|G|): {";
  auto primes = prime_set(g.order());
  for (std::size_t i = 0; i < primes.size(); ++i) out << (i ? "," : "") << primes[i];
  out << "}\n";

  out << "  sigma(G): {";
  bool first = true;
  for (int id : sigma.signature_of_group(g)) {
    if (!first) out << ", ";
    out << sigma.class_name(id);
    first = false;
  }
  out << "}\n";

  out << "  chief series:\n";
  for (const ChiefFactor& f : chief_series(g)) {
    out << "    " << f.below.order() << " < " << f.above.order()
        << "  factor order " << f.factor_order << ", |G:C| = " << f.centralizer_index
        << ", sigma-central: " << (is_sigma_central(g, f, sigma) ? "yes" : "no") << "\n";
  }

  out << "  sigma-nilpotent: " << (is_sigma_nilpotent(g, sigma) ? "true" : "false") << "\n";
  out << "  sigma-soluble: " << (is_sigma_soluble(g, sigma) ? "true" : "false") << "\n";
  out << "  F_sigma(G): order " << sigma_fitting(g, sigma).order() << "\n";
  out << "  R_sigma(G): order " << sigma_radical(g, sigma).order() << "\n";

  SubgroupLattice lat = SubgroupLattice::enumerate(g, lattice_limit);
  out << "  subgroups: " << lat.size() << " in " << lat.conjugacy_classes().size()
      << " conjugacy classes\n";

  CompleteHallSet hs = complete_hall_sigma_set(lat, sigma);
  if (hs.complete) {
    out << "  complete Hall sigma-set: orders";
    for (std::size_t i : hs.members) out << " " << lat.subgroup(i).order();
    out << "\n";
  } else {
    out << "  complete Hall sigma-set: none (class " << sigma.class_name(*hs.failing_class)
        << " has no Hall subgroup)\n";
  }

  for (int id : sigma.signature_of_group(g)) {
    out << "  D_" << sigma.class_name(id) << ": "
        << (satisfies_D_class(lat, sigma, id) ? "true" : "false") << "\n";
  }
  return out.str();
}

}  // namespace sgt
