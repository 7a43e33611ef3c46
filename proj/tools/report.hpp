#pragma once

// Rendering of command results. Kept apart from main.cpp so tests can check
// report content without spawning the binary.

#include <cstdint>
#include <string>

#include "json.hpp"
#include "psq/extremal.hpp"
#include "psq/lemma_lab.hpp"
#include "psq/pstring.hpp"

namespace psq::cli {

using Json = nlohmann::ordered_json;

enum class Format { json, plain, csv };

Json analyze_json(const PString& s);
std::string analyze_plain(const PString& s);

Json lemma_instance_json(const LemmaInstance& inst);
Json lemma_suite_json(const std::vector<LemmaReport>& reports, const SuiteLimits& limits, std::uint64_t seed,
                      const SuiteOptions& options);
std::string lemma_suite_plain(const std::vector<LemmaReport>& reports);
bool suite_clean(const std::vector<LemmaReport>& reports);

Json scan_json(const ScanReport& report);
std::string scan_plain(const ScanReport& report);
/// Columns n, sigma, max_ps, witness; one row per (n, sigma) cell.
std::string scan_csv(const ScanReport& report);

Json lowerbound_json(const LowerBoundCheck& check);
std::string lowerbound_plain(const LowerBoundCheck& check);

struct MaximizeRun {
  std::size_t n = 0;
  int sigma = 0;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  MaximizerResult result;
  /// PS of the best string recomputed by the definition-level oracle.
  std::size_t oracle_ps = 0;
  bool conjecture_violation() const noexcept { return oracle_ps >= n; }
};

MaximizeRun run_maximize(std::size_t n, int sigma, std::uint64_t budget, std::uint64_t seed);
Json maximize_json(const MaximizeRun& run);
std::string maximize_plain(const MaximizeRun& run);

}  // namespace psq::cli
