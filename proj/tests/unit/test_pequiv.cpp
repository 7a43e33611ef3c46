#include "doctest.h"

#include <random>

#include "psq/canonical.hpp"
#include "psq/error.hpp"
#include "psq/oracle.hpp"
#include "psq/pequiv.hpp"

using namespace psq;

namespace {

PString P(std::string_view text) { return parse_pstring(text); }

}  // namespace

TEST_CASE("p_equivalent examples") {
  CHECK(p_equivalent(P("aabcacbbdad"), P("bbcabaccdbd")));
  for (auto text : {"", "a", "abcab", "aabbac"}) CHECK(p_equivalent(P(text), P(text)));
  CHECK_FALSE(p_equivalent(P("ab"), P("aa")));
  CHECK_FALSE(p_equivalent(P("aa"), P("ab")));
  CHECK_FALSE(p_equivalent(P("ab"), P("abc")));
}

TEST_CASE("recover_witness examples") {
  const auto w = recover_witness(P("aabcacbbdad"), P("bbcabaccdbd"));
  REQUIRE(w);
  CHECK(format_partial(w->forced) == "{a->b, b->c, c->a, d->d}");
  CHECK(w->extension_count == 1);

  const auto single = recover_witness(P("a@3"), P("b@3"));
  REQUIRE(single);
  CHECK(format_partial(single->forced) == "{a->b}");
  CHECK(single->extension_count == 2);

  const auto swap = recover_witness(P("ab"), P("ba"));
  REQUIRE(swap);
  CHECK(format_partial(swap->forced) == "{a->b, b->a}");

  CHECK_FALSE(recover_witness(P("ab"), P("aa")));
  CHECK_THROWS_AS(recover_witness(P("ab"), P("abc")), DomainError);
}

TEST_CASE("oracle examples") {
  CHECK(oracle::p_equivalent(P("aa"), P("bb")));
  CHECK(oracle::p_equivalent(P("ab"), P("ac")));
  CHECK(oracle::p_equivalent(P("ac"), P("ba")));
  CHECK(oracle::p_equivalent(P("aabcacbbdad"), P("bbcabaccdbd")));
  CHECK_FALSE(oracle::p_equivalent(P("ab"), P("aa")));
}

TEST_CASE("prev-encoding equivalence agrees with the backtracking oracle on all pairs (|x| <= 6, sigma <= 3)") {
  std::size_t pairs = 0;
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto strings = all_strings(n, 3);
    for (const auto& x : strings) {
      for (const auto& y : strings) {
        REQUIRE(p_equivalent(x, y) == oracle::p_equivalent(x, y));
        ++pairs;
      }
    }
  }
  CHECK(pairs > 500000);
}

TEST_CASE("equivalence is reflexive, symmetric and transitive on random triples") {
  std::mt19937_64 rng(99);
  auto random_string = [&](std::size_t n) {
    std::vector<Symbol> s(n);
    for (auto& c : s) c = static_cast<Symbol>(rng() % 3);
    return PString(s, 3);
  };
  int transitive_checks = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const auto n = rng() % 5;
    const auto x = random_string(n), y = random_string(n), z = random_string(n);
    CHECK(p_equivalent(x, x));
    CHECK(p_equivalent(x, y) == p_equivalent(y, x));
    if (p_equivalent(x, y) && p_equivalent(y, z)) {
      CHECK(p_equivalent(x, z));
      ++transitive_checks;
    }
  }
  CHECK(transitive_checks > 100);
}

TEST_CASE("every completion of a recovered witness maps x onto y") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto strings = all_strings(n, 3);
    for (const auto& x : strings) {
      for (const auto& y : strings) {
        const auto w = recover_witness(x.with_sigma(4), y.with_sigma(4));
        if (!w) continue;
        std::uint64_t completions = 0;
        w->forced.for_each_completion(4, [&](const Bijection& f) {
          CHECK(f.apply(x.with_sigma(4)) == y.with_sigma(4));
          ++completions;
          return true;
        });
        CHECK(completions == w->extension_count);
      }
    }
  }
}
