#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "psq/bijection.hpp"
#include "psq/pstring.hpp"

namespace psq {

/// The statements the lab checks. Declaration order is report order.
enum class LemmaId {
  L3_commuting_gcd,           // p+q <= |s| and commuting witnesses => gcd(p,q) |- s
  L4_prior_gcd,               // p+q+min(p,q)(|Alp s|-1) <= |s| => gcd(p,q) |- s
  L5_prior_alphabet,          // |s'| >= p(s)(|Alp s|-1) => |Alp s'| >= |Alp s|-1
  L6_substring_alphabet,      // p |- s, |s'| >= p(k-2)+1 => |Alp s'| >= k-1
  C7_corollary,               // L6 at k = |Alp s|
  L8_commute_from_agreement,  // f.g and g.f agree off two symbols => they commute
  L9_tight_gcd,               // p+q+min(p,q)(|Alp s|-2) <= |s| => gcd(p,q) |- s
  L_overlap,                  // p |- xy, p |- yz, |y| >= p(|Alp|-1)+1 => p |- xyz
  L_extension,                // q |- t, p |- t[..|s|], q = kp, p(|Alp t|-2)+q+1 <= |s| => p |- t
};

inline constexpr std::array kAllLemmas = {
    LemmaId::L3_commuting_gcd,      LemmaId::L4_prior_gcd,
    LemmaId::L5_prior_alphabet,     LemmaId::L6_substring_alphabet,
    LemmaId::C7_corollary,          LemmaId::L8_commute_from_agreement,
    LemmaId::L9_tight_gcd,          LemmaId::L_overlap,
    LemmaId::L_extension,
};

std::string_view to_string(LemmaId id) noexcept;

/// One evaluated premise/conclusion pair.
struct LemmaInstance {
  LemmaId lemma_id{};
  /// Named inputs in a fixed order, already formatted ("s" -> "abab", "p" -> "2").
  std::vector<std::pair<std::string, std::string>> inputs;
  bool premise_holds = false;
  /// Evaluated only when the premise holds.
  std::optional<bool> conclusion_holds;

  bool is_counterexample() const noexcept { return premise_holds && conclusion_holds == false; }
};

/// 1-based inclusive substring bounds.
struct Interval {
  std::size_t first = 1;
  std::size_t last = 0;
  std::size_t length() const noexcept { return last - first + 1; }
};

/// Which alphabet the overlap statement's size bound is read against.
enum class OverlapReading {
  joined,  // |Alp(xyz)|
  middle,  // |Alp(y)|
};

LemmaInstance check_L3(const PString& s, std::size_t p, std::size_t q);
LemmaInstance check_L4(const PString& s, std::size_t p, std::size_t q);
/// Throws DomainError for an empty or out-of-range interval.
LemmaInstance check_L5(const PString& s, Interval range);
/// Throws DomainError unless 2 <= k <= |Alp(s)|+1, or for a bad interval.
LemmaInstance check_L6(const PString& s, std::size_t p, Interval range, int k);
LemmaInstance check_C7(const PString& s, std::size_t p, Interval range);
/// `excluded` names the two symbols outside the agreement set.
/// Throws DomainError if sigma < 2, the bijections differ in size, or the
/// excluded symbols are equal or out of range.
LemmaInstance check_L8(const Bijection& f, const Bijection& g, std::pair<Symbol, Symbol> excluded);
/// Throws DomainError if |Alp(s)| < 2.
LemmaInstance check_L9(const PString& s, std::size_t p, std::size_t q);
/// Throws DomainError if x, y or z is empty.
LemmaInstance check_overlap(const PString& x, const PString& y, const PString& z, std::size_t p,
                            OverlapReading reading = OverlapReading::joined);
/// Throws DomainError if s_len is 0 or exceeds |t|.
LemmaInstance check_extension(const PString& t, std::size_t s_len, std::size_t p, std::size_t q);

/// A named side statistic that documents, rather than asserts, something
/// about a lemma (e.g. how often a tighter premise admits new instances).
struct Probe {
  std::string name;
  std::uint64_t count = 0;
  std::optional<LemmaInstance> example;
};

struct LemmaReport {
  LemmaId lemma_id{};
  std::uint64_t instances_checked = 0;
  std::uint64_t premise_satisfied = 0;
  std::uint64_t counterexample_count = 0;
  /// The first kStoredCounterexamples counterexamples in enumeration order.
  std::vector<LemmaInstance> counterexamples;
  std::vector<Probe> probes;

  static constexpr std::size_t kStoredCounterexamples = 32;
};

struct SuiteLimits {
  std::size_t max_n = 12;           // exhaustive string length
  int max_sigma = 3;                // exhaustive distinct symbols
  int perm_max_sigma = 5;           // exhaustive permutation pairs for L8
  std::uint64_t random_instances = 100000;
  std::size_t random_max_n = 24;
  int random_max_sigma = 5;
  unsigned threads = 0;             // 0 = hardware concurrency

  /// Everything off: the suite checks nothing.
  static SuiteLimits zero() { return {0, 0, 0, 0, 0, 0, 1}; }
};

struct SuiteOptions {
  /// Harness self-test: replaces L4's premise by the bare p+q <= |s|, which
  /// is false for parameterized periods, so the suite must find counterexamples.
  bool corrupt_l4_premise = false;
};

/// Exhaustive sweep over canonical strings within the limits, then
/// `random_instances` seeded random instances spread across the lemmas.
/// Returns one report per lemma in LemmaId order; the result depends only on
/// (limits, seed, options), never on the thread count.
std::vector<LemmaReport> run_lemma_suite(const SuiteLimits& limits, std::uint64_t seed,
                                         const SuiteOptions& options = {});

}  // namespace psq
