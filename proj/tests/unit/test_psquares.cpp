#include "doctest.h"

#include <set>

#include "psq/bijection.hpp"
#include "psq/canonical.hpp"
#include "psq/oracle.hpp"
#include "psq/psquares.hpp"

using namespace psq;

namespace {

PString P(std::string_view text) { return parse_pstring(text); }

std::set<std::string> square_texts(const PString& s) {
  std::set<std::string> out;
  for (const auto& occ : enumerate_psquares(s)) {
    out.insert(format_symbols(s.slice(occ.start - 1, occ.length()).symbols(), 26));
  }
  return out;
}

}  // namespace

TEST_CASE("is_psquare") {
  CHECK(is_psquare(P("abba")));
  CHECK(is_psquare(P("aa")));
  CHECK(is_psquare(P("aabb")));
  CHECK(is_psquare(P("ab")));
  CHECK_FALSE(is_psquare(P("")));
  CHECK_FALSE(is_psquare(P("aaa")));
  CHECK_FALSE(is_psquare(P("a")));
  CHECK_FALSE(is_psquare(P("aabc")));
}

TEST_CASE("enumerate_psquares examples") {
  CHECK(square_texts(P("aabbac")) == std::set<std::string>{"aa", "ab", "ac", "ba", "bb", "aabb", "abba"});

  const auto ab = enumerate_psquares(P("ab"));
  REQUIRE(ab.size() == 1);
  CHECK(ab[0] == SquareOccurrence{1, 1, false});

  const auto aaaa = enumerate_psquares(P("aaaa"));
  CHECK(aaaa == std::vector<SquareOccurrence>{{1, 1, true}, {1, 2, true}, {2, 1, true}, {3, 1, true}});
}

TEST_CASE("PS and PS' examples") {
  CHECK(count_nonequiv_psquares(P("aabbac")) == 4);
  CHECK(count_nonequiv_psquares(P("a")) == 0);
  CHECK(count_nonequiv_psquares(P("aaaa")) == 2);

  CHECK(count_nonequiv_proper_psquares(P("aabbac")) == 3);
  CHECK(count_nonequiv_proper_psquares(P("aaaa")) == 0);
  CHECK(count_nonequiv_proper_psquares(P("abab")) == 1);
  CHECK(count_nonequiv_psquares(P("abab")) == 2);
}

TEST_CASE("classify_psquares reproduces the worked example's classes") {
  const auto s = P("aabbac");
  const auto classes = classify_psquares(s);
  REQUIRE(classes.size() == 4);
  auto members = [&](std::size_t i) {
    std::vector<std::string> out;
    for (const auto& m : classes[i].members) out.push_back(format_symbols(m.symbols(), 26));
    return out;
  };
  CHECK(members(0) == std::vector<std::string>{"aa", "bb"});
  CHECK(members(1) == std::vector<std::string>{"ab", "ac", "ba"});
  CHECK(members(2) == std::vector<std::string>{"aabb"});
  CHECK(members(3) == std::vector<std::string>{"abba"});
  CHECK_FALSE(classes[0].has_unequal_halves);
  CHECK(classes[1].has_unequal_halves);

  for (const auto& cls : classes) {
    for (const auto& m : cls.members) CHECK(prev_encode(m) == cls.key.key);
    for (const auto& occ : cls.occurrences) CHECK(class_key(s, occ) == cls.key);
  }
}

TEST_CASE("prefix_psquares_without_other_occurrence examples") {
  CHECK(prefix_psquares_without_other_occurrence(P("aabbba")) == std::vector<std::size_t>{4, 6});
  CHECK(oracle::profile_psquares(P("aabbba")).unique_square_prefixes == std::vector<std::size_t>{4, 6});
  CHECK(prefix_psquares_without_other_occurrence(P("aa")) == std::vector<std::size_t>{2});
  CHECK(prefix_psquares_without_other_occurrence(P("aaaa")) == std::vector<std::size_t>{4});
  CHECK(prefix_psquares_without_other_occurrence(P("")).empty());
}

TEST_CASE("square profile agrees with the double-loop oracle on all canonical strings (|s| <= 8, sigma <= 3)") {
  for (const auto& s : canonical_strings(8, 3)) {
    const auto fast = profile_psquares(s.symbols());
    const auto slow = oracle::profile_psquares(s);
    REQUIRE(fast.ps == slow.ps);
    REQUIRE(fast.ps_prime == slow.ps_prime);
    REQUIRE(fast.unique_square_prefixes == slow.unique_square_prefixes);
  }
}

TEST_CASE("square counts are renaming-invariant and respect the bounds (|s| <= 8, sigma <= 3)") {
  const auto perms = all_permutations(3);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& s : all_strings(n, 3)) {
      const auto base = profile_psquares(s.symbols());
      for (const auto& f : perms) {
        const auto renamed = profile_psquares(f.apply(s).symbols());
        REQUIRE(renamed.ps == base.ps);
        REQUIRE(renamed.ps_prime == base.ps_prime);
      }
      const auto sigma = static_cast<std::size_t>(s.alphabet_size());
      CHECK(base.ps_prime <= base.ps);
      CHECK(base.ps < sigma * n);
      CHECK(base.unique_square_prefixes.size() <= sigma);
    }
  }
}

TEST_CASE("enumerate/classify/count paths are mutually consistent") {
  for (const auto& s : canonical_strings(7, 3)) {
    const auto occurrences = enumerate_psquares(s);
    std::set<ClassKey> keys;
    for (const auto& occ : occurrences) {
      const auto square = s.slice(occ.start - 1, occ.length());
      CHECK(is_psquare(square));
      CHECK(occ.is_standard == (square.slice(0, occ.half_len) == square.slice(occ.half_len, occ.half_len)));
      keys.insert(class_key(s, occ));
    }
    CHECK(keys.size() == count_nonequiv_psquares(s));
    CHECK(classify_psquares(s).size() == keys.size());
  }
}
