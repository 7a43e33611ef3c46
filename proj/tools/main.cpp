// psq: analysis, lemma verification and bound search for parameterized squares.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "psq/error.hpp"
#include "report.hpp"

namespace {

using psq::cli::Format;
using psq::cli::Json;

constexpr std::uint64_t kDefaultSeed = 42;

enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2 };

struct Common {
  Format format = Format::json;
  std::string out;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Budgets are counts, but "1e5" is accepted since that is how they tend to be written.
std::uint64_t parse_count(const std::string& text, const char* what) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(value >= 0) || value > 1e18 || std::floor(value) != value) {
    throw UsageError(std::string(what) + " must be a non-negative integer, got '" + text + "'");
  }
  return static_cast<std::uint64_t>(value);
}

int emit(const Common& common, const std::string& body) {
  if (common.out.empty()) {
    std::cout << body << std::flush;
    return kOk;
  }
  std::ofstream file(common.out, std::ios::binary | std::ios::trunc);
  if (!file) {
    std::cerr << "psq: cannot write " << common.out << "\n";
    return kUsage;
  }
  file << body;
  return file ? kOk : kUsage;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

// Picks the body for the requested format; csv falls back to an error where unsupported.
std::string pick(const Common& common, const Json& j, const std::string& plain, const char* command) {
  switch (common.format) {
    case Format::json:
      return render(j);
    case Format::plain:
      return plain;
    case Format::csv:
      throw UsageError(std::string("--format csv is only available for scan, not ") + command);
  }
  return render(j);
}

void add_common(CLI::App* sub, Common& common) {
  const std::map<std::string, Format> formats{{"json", Format::json}, {"plain", Format::plain}, {"csv", Format::csv}};
  sub->add_option("--format", common.format, "Output format: json, plain or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sub->add_option("--out", common.out, "Write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parameterized squares: analysis, lemma verification and bound search"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "psq 0.1.0");

  Common common;

  std::string analyze_input;
  auto* analyze = app.add_subcommand("analyze", "PS, PS', p-periods, square table and qualifying prefixes");
  analyze->add_option("string", analyze_input, "Input string: letters (aabbac) or ids (0,0,1,1,0,2), optional @sigma")
      ->required();
  add_common(analyze, common);

  psq::SuiteLimits limits;
  std::string lemma_budget = std::to_string(limits.random_instances);
  std::uint64_t lemma_seed = kDefaultSeed;
  bool corrupt = false;
  auto* verify = app.add_subcommand("verify-lemmas", "Exhaustive and random checks of the periodicity lemmas");
  verify->add_option("--max-n", limits.max_n, "Exhaustive string length")->capture_default_str();
  verify->add_option("--max-sigma", limits.max_sigma, "Exhaustive distinct symbols")->capture_default_str();
  verify->add_option("--perm-max-sigma", limits.perm_max_sigma, "Permutation sweep alphabet size")
      ->capture_default_str();
  verify->add_option("--budget", lemma_budget, "Random instances")->capture_default_str();
  verify->add_option("--random-max-n", limits.random_max_n, "Random string length")->capture_default_str();
  verify->add_option("--random-max-sigma", limits.random_max_sigma, "Random alphabet size")->capture_default_str();
  verify->add_option("--seed", lemma_seed, "RNG seed")->capture_default_str();
  verify->add_option("--threads", limits.threads, "Worker threads (0: hardware)")->capture_default_str();
  verify->add_flag("--zero-limits", "Check nothing; every limit set to zero");
  verify->add_flag("--self-test-corrupt", corrupt, "Weaken one premise so the harness must report counterexamples");
  add_common(verify, common);

  std::size_t scan_n = 12;
  int scan_sigma = 3;
  unsigned scan_threads = 0;
  auto* scan = app.add_subcommand("scan", "Exhaustive bound scan over canonical strings");
  scan->add_option("--max-n", scan_n, "Largest string length")->capture_default_str();
  scan->add_option("--max-sigma", scan_sigma, "Largest alphabet size")->capture_default_str();
  scan->add_option("--threads", scan_threads, "Worker threads (0: hardware)")->capture_default_str();
  add_common(scan, common);

  int lb_sigma = 0;
  auto* lowerbound = app.add_subcommand("lowerbound", "Build and verify the sigma-prefix construction");
  lowerbound->add_option("sigma", lb_sigma, "Alphabet size, at least 2")->required();
  add_common(lowerbound, common);

  std::size_t max_n = 0;
  int max_sigma = 0;
  std::string max_budget = "100000";
  std::uint64_t max_seed = kDefaultSeed;
  auto* maximize = app.add_subcommand("maximize", "Hill climbing with restarts for strings with many squares");
  maximize->add_option("n", max_n, "String length")->required();
  maximize->add_option("sigma", max_sigma, "Alphabet size")->required();
  maximize->add_option("--budget", max_budget, "Mutation steps")->capture_default_str();
  maximize->add_option("--seed", max_seed, "RNG seed")->capture_default_str();
  add_common(maximize, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (analyze->parsed()) {
      const auto s = psq::parse_pstring(analyze_input);
      return emit(common, pick(common, psq::cli::analyze_json(s), psq::cli::analyze_plain(s), "analyze"));
    }

    if (verify->parsed()) {
      limits.random_instances = parse_count(lemma_budget, "--budget");
      if (verify->count("--zero-limits")) {
        const auto threads = limits.threads;
        limits = psq::SuiteLimits::zero();
        limits.threads = threads;
      }
      psq::SuiteOptions options;
      options.corrupt_l4_premise = corrupt;
      const auto reports = psq::run_lemma_suite(limits, lemma_seed, options);
      const auto body = pick(common, psq::cli::lemma_suite_json(reports, limits, lemma_seed, options),
                             psq::cli::lemma_suite_plain(reports), "verify-lemmas");
      const int rc = emit(common, body);
      if (rc != kOk) return rc;
      return psq::cli::suite_clean(reports) ? kOk : kFailed;
    }

    if (scan->parsed()) {
      const auto report = psq::exhaustive_bound_scan(scan_n, scan_sigma, scan_threads);
      std::string body;
      switch (common.format) {
        case Format::json: body = render(psq::cli::scan_json(report)); break;
        case Format::plain: body = psq::cli::scan_plain(report); break;
        case Format::csv: body = psq::cli::scan_csv(report); break;
      }
      const int rc = emit(common, body);
      if (rc != kOk) return rc;
      return report.violations.empty() ? kOk : kFailed;
    }

    if (lowerbound->parsed()) {
      if (lb_sigma < 2) throw UsageError("lowerbound needs sigma >= 2");
      const auto check = psq::check_lower_bound(lb_sigma);
      const int rc = emit(common, pick(common, psq::cli::lowerbound_json(check), psq::cli::lowerbound_plain(check),
                                       "lowerbound"));
      if (rc != kOk) return rc;
      return check.verified ? kOk : kFailed;
    }

    if (maximize->parsed()) {
      const auto run = psq::cli::run_maximize(max_n, max_sigma, parse_count(max_budget, "--budget"), max_seed);
      const int rc =
          emit(common, pick(common, psq::cli::maximize_json(run), psq::cli::maximize_plain(run), "maximize"));
      if (rc != kOk) return rc;
      return (run.conjecture_violation() || run.oracle_ps != run.result.ps) ? kFailed : kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "psq: " << e.what() << "\n";
    return kUsage;
  } catch (const psq::ParseError& e) {
    std::cerr << "psq: parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const psq::DomainError& e) {
    std::cerr << "psq: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
