#include "report.hpp"

#include <iomanip>
#include <sstream>

#include "psq/oracle.hpp"
#include "psq/pperiod.hpp"
#include "psq/psquares.hpp"

namespace psq::cli {

namespace {

std::string text(const PString& s) { return format_pstring(s); }

// Square substrings are shown without the ambient-size suffix.
std::string bare(const PString& s) { return format_symbols(s.symbols(), s.sigma()); }

Json offsets_json(const PrevEncoding& e) {
  Json out = Json::array();
  for (auto v : e.offsets) out.push_back(v);
  return out;
}

std::string join(const std::vector<std::size_t>& values, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

Json analyze_json(const PString& s) {
  Json out;
  out["command"] = "analyze";
  out["input"] = text(s);
  out["length"] = s.size();
  out["sigma"] = s.sigma();
  out["alphabet_size"] = s.alphabet_size();

  const auto profile = profile_psquares(s.symbols());
  out["ps"] = profile.ps;
  out["ps_prime"] = profile.ps_prime;
  out["smallest_pperiod"] = s.empty() ? Json(nullptr) : Json(smallest_pperiod(s));
  out["pperiods"] = all_pperiods(s);

  Json occurrences = Json::array();
  for (const auto& occ : enumerate_psquares(s)) {
    occurrences.push_back({{"start", occ.start},
                           {"half_len", occ.half_len},
                           {"square", bare(s.slice(occ.start - 1, occ.length()))},
                           {"class_key", offsets_json(class_key(s, occ).key)},
                           {"is_standard", occ.is_standard}});
  }
  out["occurrences"] = std::move(occurrences);

  Json classes = Json::array();
  for (const auto& cls : classify_psquares(s)) {
    Json members = Json::array();
    for (const auto& m : cls.members) members.push_back(bare(m));
    classes.push_back({{"class_key", offsets_json(cls.key.key)},
                       {"members", std::move(members)},
                       {"occurrences", cls.occurrences.size()},
                       {"in_ps_prime", cls.has_unequal_halves}});
  }
  out["classes"] = std::move(classes);
  out["prefix_lengths"] = profile.unique_square_prefixes;
  return out;
}

std::string analyze_plain(const PString& s) {
  std::ostringstream os;
  const auto profile = profile_psquares(s.symbols());
  os << "string    " << text(s) << "  (n=" << s.size() << ", distinct=" << s.alphabet_size()
     << ", sigma=" << s.sigma() << ")\n";
  os << "PS        " << profile.ps << "\n";
  os << "PS'       " << profile.ps_prime << "\n";
  os << "p(s)      " << (s.empty() ? std::string("-") : std::to_string(smallest_pperiod(s))) << "\n";
  os << "p-periods " << join(all_pperiods(s)) << "\n";
  os << "classes\n";
  for (const auto& cls : classify_psquares(s)) {
    std::string members;
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
      if (i) members += " ~ ";
      members += bare(cls.members[i]);
    }
    os << "  " << std::left << std::setw(28) << members << " key " << std::setw(16) << format_encoding(cls.key.key)
       << (cls.has_unequal_halves ? "" : " (equal halves only)") << "\n";
  }
  os << "occurrences (start half_len square standard)\n";
  for (const auto& occ : enumerate_psquares(s)) {
    os << "  " << occ.start << " " << occ.half_len << " " << bare(s.slice(occ.start - 1, occ.length())) << " "
       << (occ.is_standard ? "yes" : "no") << "\n";
  }
  os << "unique square prefixes " << join(profile.unique_square_prefixes) << "\n";
  return os.str();
}

Json lemma_instance_json(const LemmaInstance& inst) {
  Json inputs = Json::object();
  for (const auto& [k, v] : inst.inputs) inputs[k] = v;
  return {{"lemma_id", std::string(to_string(inst.lemma_id))},
          {"inputs", std::move(inputs)},
          {"premise_holds", inst.premise_holds},
          {"conclusion_holds", inst.conclusion_holds ? Json(*inst.conclusion_holds) : Json(nullptr)}};
}

bool suite_clean(const std::vector<LemmaReport>& reports) {
  for (const auto& r : reports) {
    if (r.counterexample_count) return false;
  }
  return true;
}

Json lemma_suite_json(const std::vector<LemmaReport>& reports, const SuiteLimits& limits, std::uint64_t seed,
                      const SuiteOptions& options) {
  Json out;
  out["command"] = "verify-lemmas";
  out["seed"] = seed;
  out["limits"] = {{"max_n", limits.max_n},
                   {"max_sigma", limits.max_sigma},
                   {"perm_max_sigma", limits.perm_max_sigma},
                   {"random_instances", limits.random_instances},
                   {"random_max_n", limits.random_max_n},
                   {"random_max_sigma", limits.random_max_sigma}};
  out["corrupt_l4_premise"] = options.corrupt_l4_premise;
  out["all_clean"] = suite_clean(reports);

  Json list = Json::array();
  for (const auto& r : reports) {
    Json ces = Json::array();
    for (const auto& ce : r.counterexamples) ces.push_back(lemma_instance_json(ce));
    Json probes = Json::array();
    for (const auto& p : r.probes) {
      probes.push_back({{"name", p.name},
                        {"count", p.count},
                        {"example", p.example ? lemma_instance_json(*p.example) : Json(nullptr)}});
    }
    list.push_back({{"lemma_id", std::string(to_string(r.lemma_id))},
                    {"instances_checked", r.instances_checked},
                    {"premise_satisfied", r.premise_satisfied},
                    {"counterexample_count", r.counterexample_count},
                    {"counterexamples", std::move(ces)},
                    {"probes", std::move(probes)}});
  }
  out["reports"] = std::move(list);
  return out;
}

std::string lemma_suite_plain(const std::vector<LemmaReport>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(28) << "lemma" << std::right << std::setw(14) << "instances" << std::setw(14)
     << "premise" << std::setw(10) << "failures" << "\n";
  for (const auto& r : reports) {
    os << std::left << std::setw(28) << to_string(r.lemma_id) << std::right << std::setw(14) << r.instances_checked
       << std::setw(14) << r.premise_satisfied << std::setw(10) << r.counterexample_count << "\n";
    for (const auto& p : r.probes) os << "    probe " << p.name << ": " << p.count << "\n";
  }
  os << (suite_clean(reports) ? "all lemmas hold on every checked instance\n" : "COUNTEREXAMPLES FOUND\n");
  return os.str();
}

Json scan_json(const ScanReport& report) {
  Json out;
  out["command"] = "scan";
  out["limits"] = {{"max_n", report.max_n}, {"max_sigma", report.max_sigma}};
  out["strings_checked"] = report.strings_checked;
  out["max_ps_ratio"] = {{"value", report.max_ps_ratio()},
                         {"ps", report.best_ratio_ps},
                         {"n", report.best_ratio_n},
                         {"witness", text(report.best_ratio_witness)}};
  out["max_prefix_count"] = {{"value", report.max_prefix_count}, {"witness", text(report.max_prefix_witness)}};
  out["conjecture"] = {{"max_margin", report.conjecture_margin},
                       {"witness", text(report.conjecture_witness)},
                       {"holds", report.conjecture_margin < 0}};
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"string", text(v.string)},
                          {"bound", std::string(to_string(v.bound))},
                          {"ps", v.ps},
                          {"prefix_count", v.prefix_count}});
  }
  out["violations"] = std::move(violations);
  Json cells = Json::array();
  for (const auto& c : report.cells) {
    cells.push_back({{"n", c.n}, {"sigma", c.sigma}, {"max_ps", c.max_ps}, {"witness", text(c.witness)}});
  }
  out["cells"] = std::move(cells);
  return out;
}

std::string scan_plain(const ScanReport& report) {
  std::ostringstream os;
  os << "scanned " << report.strings_checked << " canonical strings (n <= " << report.max_n
     << ", sigma <= " << report.max_sigma << ")\n";
  os << "max PS/n        " << report.best_ratio_ps << "/" << report.best_ratio_n << " at "
     << text(report.best_ratio_witness) << "\n";
  os << "max prefixes    " << report.max_prefix_count << " at " << text(report.max_prefix_witness) << "\n";
  os << "max PS - n      " << report.conjecture_margin << " at " << text(report.conjecture_witness) << "\n";
  os << "violations      " << report.violations.size() << "\n";
  for (const auto& v : report.violations) {
    os << "  " << to_string(v.bound) << " " << text(v.string) << " PS=" << v.ps << " prefixes=" << v.prefix_count
       << "\n";
  }
  return os.str();
}

std::string scan_csv(const ScanReport& report) {
  std::ostringstream os;
  os << "n,sigma,max_ps,witness\n";
  for (const auto& c : report.cells) os << c.n << "," << c.sigma << "," << c.max_ps << "," << text(c.witness) << "\n";
  return os.str();
}

Json lowerbound_json(const LowerBoundCheck& check) {
  return {{"command", "lowerbound"},
          {"sigma", check.string.sigma()},
          {"string", text(check.string)},
          {"length", check.string.size()},
          {"prefix_lengths", check.prefix_lengths},
          {"verified", check.verified}};
}

std::string lowerbound_plain(const LowerBoundCheck& check) {
  std::ostringstream os;
  os << "string    " << text(check.string) << "\n";
  os << "prefixes  " << join(check.prefix_lengths) << "\n";
  os << "verified  " << (check.verified ? "true" : "false") << "\n";
  return os.str();
}

MaximizeRun run_maximize(std::size_t n, int sigma, std::uint64_t budget, std::uint64_t seed) {
  MaximizeRun run{n, sigma, budget, seed, heuristic_maximizer(n, sigma, budget, seed), 0};
  run.oracle_ps = oracle::profile_psquares(run.result.best).ps;
  return run;
}

Json maximize_json(const MaximizeRun& run) {
  return {{"command", "maximize"},
          {"n", run.n},
          {"sigma", run.sigma},
          {"budget", run.budget},
          {"seed", run.seed},
          {"best", text(run.result.best)},
          {"ps", run.result.ps},
          {"oracle_ps", run.oracle_ps},
          {"ratio", static_cast<double>(run.result.ps) / static_cast<double>(run.n)},
          {"steps", run.result.steps},
          {"restarts", run.result.restarts},
          {"conjecture_violation", run.conjecture_violation()}};
}

std::string maximize_plain(const MaximizeRun& run) {
  std::ostringstream os;
  os << "best      " << text(run.result.best) << "\n";
  os << "PS        " << run.result.ps << " (oracle " << run.oracle_ps << ")\n";
  os << "PS/n      " << static_cast<double>(run.result.ps) / static_cast<double>(run.n) << "\n";
  os << "restarts  " << run.result.restarts << "\n";
  if (run.conjecture_violation()) os << "PS >= n: conjecture counterexample\n";
  return os.str();
}

}  // namespace psq::cli
