#include "doctest.h"

#include "report.hpp"

using namespace psq;
using psq::cli::Json;

TEST_CASE("analyze report") {
  const auto j = cli::analyze_json(parse_pstring("aabbac"));
  CHECK(j["ps"] == 4);
  CHECK(j["ps_prime"] == 3);
  CHECK(j["smallest_pperiod"] == 5);
  CHECK(j["occurrences"].size() == 7);
  CHECK(j["occurrences"][0]["square"] == "aa");
  CHECK(j["occurrences"][0]["is_standard"] == true);
  REQUIRE(j["classes"].size() == 4);
  CHECK(j["classes"][1]["members"] == Json::array({"ab", "ac", "ba"}));
  CHECK(j["classes"][0]["in_ps_prime"] == false);
  CHECK(j["classes"][3]["class_key"] == Json::array({0, 0, 1, 3}));
  CHECK(j["prefix_lengths"] == Json::array({4}));

  CHECK(cli::analyze_json(parse_pstring(""))["smallest_pperiod"].is_null());
  CHECK(cli::analyze_json(parse_pstring("a"))["ps"] == 0);

  const auto plain = cli::analyze_plain(parse_pstring("aabbac"));
  CHECK(plain.find("ab ~ ac ~ ba") != std::string::npos);
}

TEST_CASE("lowerbound and scan reports") {
  const auto lb = cli::lowerbound_json(check_lower_bound(2));
  CHECK(lb["string"] == "aabbba");
  CHECK(lb["prefix_lengths"] == Json::array({4, 6}));
  CHECK(lb["verified"] == true);

  const auto report = exhaustive_bound_scan(4, 2, 1);
  const auto j = cli::scan_json(report);
  CHECK(j["violations"].empty());
  CHECK(j["conjecture"]["holds"] == true);
  CHECK(j["cells"].size() == report.cells.size());
  const auto csv = cli::scan_csv(report);
  CHECK(csv.rfind("n,sigma,max_ps,witness\n1,1,0,a\n", 0) == 0);
}

TEST_CASE("lemma suite report") {
  auto reports = run_lemma_suite(SuiteLimits::zero(), 1);
  CHECK(cli::suite_clean(reports));
  const auto j = cli::lemma_suite_json(reports, SuiteLimits::zero(), 1, {});
  CHECK(j["all_clean"] == true);
  CHECK(j["reports"].size() == 9);
  CHECK(j["reports"][0]["lemma_id"] == "L3_commuting_gcd");

  reports[1].counterexample_count = 1;
  reports[1].counterexamples.push_back(check_L4(parse_pstring("ab"), 1, 1));
  CHECK_FALSE(cli::suite_clean(reports));
  const auto bad = cli::lemma_suite_json(reports, SuiteLimits::zero(), 1, {});
  CHECK(bad["reports"][1]["counterexamples"][0]["lemma_id"] == "L4_prior_gcd");
  CHECK(bad["reports"][1]["counterexamples"][0]["inputs"].is_object());
}

TEST_CASE("maximize run") {
  const auto run = cli::run_maximize(10, 2, 500, 3);
  CHECK(run.oracle_ps == run.result.ps);
  CHECK_FALSE(run.conjecture_violation());
  const auto j = cli::maximize_json(run);
  CHECK(j["best"].get<std::string>().size() == 10);
  CHECK(cli::maximize_json(cli::run_maximize(10, 2, 500, 3)) == j);
}
