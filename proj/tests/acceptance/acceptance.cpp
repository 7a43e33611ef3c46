// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
//
// usage: acceptance <path-to-psq>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "psq/canonical.hpp"
#include "psq/extremal.hpp"
#include "psq/lemma_lab.hpp"
#include "psq/oracle.hpp"
#include "psq/pequiv.hpp"
#include "psq/psquares.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

std::string g_psq;

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Run {
  int status = -1;
  std::string out;
};

Run run_psq(const std::string& args) {
  Run r;
  const std::string cmd = "\"" + g_psq + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

int g_failed = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool in_time = secs < limit_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++g_failed;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (pass ? "PASS" : "FAIL") << "  [" << id << "] " << name << "  (" << secs << " s, limit " << limit_s
       << " s" << (in_time ? "" : ", over time") << ")";
  if (!o.detail.empty()) line << "  " << o.detail;
  std::cout << line.str() << std::endl;
}

Outcome worked_example() {
  const auto r = run_psq("analyze aabbac");
  if (r.status != 0) return {false, "exit status " + std::to_string(r.status)};
  const auto j = json::parse(r.out);
  std::vector<std::vector<std::string>> classes;
  for (const auto& c : j["classes"]) classes.push_back(c["members"].get<std::vector<std::string>>());
  const std::vector<std::vector<std::string>> want{{"aa", "bb"}, {"ab", "ac", "ba"}, {"aabb"}, {"abba"}};
  const bool ok = j["ps"] == 4 && j["ps_prime"] == 3 && classes == want;
  return {ok, "PS=" + j["ps"].dump() + " PS'=" + j["ps_prime"].dump() + " classes=" + json(classes).dump()};
}

Outcome equivalence_example() {
  const auto x = psq::parse_pstring("aabcacbbdad");
  const auto y = psq::parse_pstring("bbcabaccdbd");
  const auto w = psq::recover_witness(x, y);
  if (!psq::p_equivalent(x, y) || !w) return {false, "not equivalent"};
  const auto text = psq::format_partial(w->forced);
  return {text == "{a->b, b->c, c->a, d->d}", "witness " + text};
}

Outcome oracle_agreement() {
  std::size_t pairs = 0, pair_bad = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto strings = psq::all_strings(n, 3);
    for (const auto& x : strings) {
      for (const auto& y : strings) {
        ++pairs;
        if (psq::p_equivalent(x, y) != psq::oracle::p_equivalent(x, y)) ++pair_bad;
      }
    }
  }
  std::size_t strings = 0, square_bad = 0;
  for (const auto& s : psq::canonical_strings(8, 3)) {
    ++strings;
    const auto fast = psq::profile_psquares(s.symbols());
    const auto slow = psq::oracle::profile_psquares(s);
    if (fast.ps != slow.ps || fast.ps_prime != slow.ps_prime ||
        fast.unique_square_prefixes != slow.unique_square_prefixes) {
      ++square_bad;
    }
  }
  std::ostringstream d;
  d << pairs << " pairs, " << pair_bad << " disagreements; " << strings << " strings, " << square_bad
    << " disagreements";
  return {pair_bad == 0 && square_bad == 0, d.str()};
}

Outcome theorem_scan() {
  std::ostringstream d;
  bool ok = true;
  for (auto [n, sigma] : {std::pair<std::size_t, int>{12, 3}, {10, 4}}) {
    const auto report = psq::exhaustive_bound_scan(n, sigma);
    std::size_t theorem = 0, conjecture = 0;
    for (const auto& v : report.violations) (v.bound == psq::Bound::conjecture ? conjecture : theorem)++;
    ok = ok && theorem == 0 && report.max_prefix_count <= static_cast<std::size_t>(sigma);
    d << "(" << n << "," << sigma << "): " << report.strings_checked << " strings, theorem violations " << theorem
      << ", max prefixes " << report.max_prefix_count << ", max PS-n " << report.conjecture_margin << " at "
      << psq::format_pstring(report.conjecture_witness) << ", PS>=n strings " << conjecture << "; ";
  }
  return {ok, d.str()};
}

Outcome lemma_suite() {
  psq::SuiteLimits limits;
  limits.random_instances = 100000;
  const auto reports = psq::run_lemma_suite(limits, 42);
  std::size_t counterexamples = 0, gap = 0;
  for (const auto& r : reports) {
    counterexamples += r.counterexample_count;
    if (r.lemma_id != psq::LemmaId::L9_tight_gcd) continue;
    for (const auto& p : r.probes) {
      if (p.name == "l9_premise_without_l4_premise") gap = p.count;
    }
  }
  std::ostringstream d;
  d << reports.size() << " reports, " << counterexamples << " counterexamples, " << gap
    << " instances with the weaker premise only";
  return {reports.size() == 9 && counterexamples == 0 && gap > 0, d.str()};
}

Outcome lower_bound() {
  std::ostringstream d;
  bool ok = true;
  for (int sigma = 2; sigma <= 6; ++sigma) {
    const bool v = psq::verify_lower_bound(sigma);
    ok = ok && v;
    d << sigma << ":" << (v ? "ok" : "no") << " ";
  }
  return {ok, d.str()};
}

Outcome determinism() {
  const std::vector<std::string> commands{
      "analyze aabbac",
      "analyze aabbac --format plain",
      "verify-lemmas --seed 42",
      "scan --max-n 12 --max-sigma 3",
      "scan --max-n 10 --max-sigma 4 --format csv",
      "lowerbound 4",
      "maximize 20 2 --budget 100000 --seed 42",
  };
  std::size_t differing = 0;
  std::string first_bad;
  for (const auto& c : commands) {
    const auto a = run_psq(c);
    const auto b = run_psq(c);
    if (a.out != b.out || a.status != b.status || a.out.empty()) {
      if (!differing++) first_bad = c;
    }
  }
  return {differing == 0, std::to_string(commands.size()) + " commands run twice" +
                              (differing ? ", first difference: " + first_bad : ", all byte-identical")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <path-to-psq>\n";
    return 2;
  }
  g_psq = argv[1];

  criterion(1, "analyze aabbac: PS 4, PS' 3, exact classes", 1.0, worked_example);
  criterion(2, "aabcacbbdad ~ bbcabaccdbd with the stated witness", 1.0, equivalence_example);
  criterion(3, "fast paths agree with definition-level oracles", 120.0, oracle_agreement);
  criterion(4, "exhaustive scans (12,3) and (10,4): PS < sigma*n, prefixes <= sigma", 600.0, theorem_scan);
  criterion(5, "lemma suite with 1e5 random instances is clean", 600.0, lemma_suite);
  criterion(6, "lower-bound construction has sigma prefixes, sigma 2..6", 60.0, lower_bound);
  criterion(7, "CLI output byte-identical across runs", 600.0, determinism);

  std::cout << (g_failed ? "acceptance: FAILED " + std::to_string(g_failed) + " of 7" : "acceptance: all 7 passed")
            << std::endl;
  return g_failed ? 1 : 0;
}
