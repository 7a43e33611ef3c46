#include "doctest.h"

#include <random>

#include "psq/bijection.hpp"
#include "psq/canonical.hpp"
#include "psq/error.hpp"
#include "psq/prev_encoding.hpp"
#include "psq/pstring.hpp"

using namespace psq;

namespace {

std::vector<std::uint32_t> enc(std::string_view text) { return prev_encode(parse_pstring(text)).offsets; }

}  // namespace

TEST_CASE("pstring_parse reads letters, ids and sigma suffixes") {
  const auto s = parse_pstring("aabbac");
  CHECK(std::vector<Symbol>(s.symbols().begin(), s.symbols().end()) == std::vector<Symbol>{0, 0, 1, 1, 0, 2});
  CHECK(s.sigma() == 3);
  CHECK(s.alphabet_size() == 3);

  const auto empty = parse_pstring("");
  CHECK(empty.empty());
  CHECK(empty.sigma() == 0);
  CHECK(parse_pstring("", 5).sigma() == 5);

  const auto ids = parse_pstring("0,0,1", 4);
  CHECK(ids.size() == 3);
  CHECK(ids.sigma() == 4);
  CHECK(ids[2] == 1);

  const auto suffixed = parse_pstring("aab@4");
  CHECK(suffixed.sigma() == 4);
  CHECK(parse_pstring("aab@4", 6).sigma() == 6);

  // ids beyond the distinct count still fit: "ac" needs an ambient size of 3.
  CHECK(parse_pstring("ac").sigma() == 3);
}

TEST_CASE("pstring_parse errors") {
  CHECK_THROWS_AS(parse_pstring("aB"), ParseError);
  CHECK_THROWS_AS(parse_pstring("a b"), ParseError);
  CHECK_THROWS_AS(parse_pstring("0,,1"), ParseError);
  CHECK_THROWS_AS(parse_pstring("0,x"), ParseError);
  CHECK_THROWS_AS(parse_pstring("abc", 2), DomainError);
  CHECK_THROWS_AS(parse_pstring("abc@2"), DomainError);
  CHECK_THROWS_AS(parse_pstring("70"), DomainError);
  CHECK_THROWS_AS(PString({3}, 3), DomainError);
}

TEST_CASE("format_pstring round-trips through parse") {
  for (std::string text : {"aabbac", "", "aab@4", "@3", "zz", "a"}) {
    CHECK(format_pstring(parse_pstring(text)) == text);
  }
  const auto wide = parse_pstring("0,27,3");
  CHECK(wide.sigma() == 28);
  CHECK(format_pstring(wide) == "0,27,3");
  CHECK(parse_pstring(format_pstring(wide)) == wide);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int sigma = 1 + static_cast<int>(rng() % 40);
    std::vector<Symbol> symbols(rng() % 10);
    for (auto& c : symbols) c = static_cast<Symbol>(rng() % static_cast<unsigned>(sigma));
    const PString s(symbols, sigma);
    CHECK(parse_pstring(format_pstring(s)) == s);
  }
}

TEST_CASE("substring uses 1-based inclusive positions") {
  const auto s = parse_pstring("aabbac");
  CHECK(format_pstring(s.substring(2, 4)) == "abb@3");
  CHECK(s.substring(4, 3).empty());
  CHECK_THROWS_AS(s.substring(0, 2), DomainError);
  CHECK_THROWS_AS(s.substring(5, 7), DomainError);
}

TEST_CASE("prev_encode examples") {
  CHECK(enc("aabb") == std::vector<std::uint32_t>{0, 1, 0, 1});
  CHECK(enc("") == std::vector<std::uint32_t>{});
  CHECK(enc("abba") == std::vector<std::uint32_t>{0, 0, 1, 3});
}

TEST_CASE("prev_encode satisfies its defining invariants") {
  for (std::size_t n = 0; n <= 7; ++n) {
    for (const auto& s : all_strings(n, 3)) {
      const auto e = prev_encode(s).offsets;
      for (std::size_t i = 0; i < n; ++i) {
        bool seen_before = false;
        for (std::size_t j = 0; j < i; ++j) seen_before = seen_before || s[j] == s[i];
        CHECK((e[i] == 0) == !seen_before);
        if (e[i] > 0) {
          REQUIRE(e[i] <= i);
          CHECK(s[i - e[i]] == s[i]);
          for (std::size_t j = i - e[i] + 1; j < i; ++j) CHECK(s[j] != s[i]);
        }
      }
    }
  }
}

TEST_CASE("prev_encode is invariant under every renaming (|s| <= 8, sigma <= 3)") {
  for (int sigma = 1; sigma <= 3; ++sigma) {
    const auto perms = all_permutations(sigma);
    for (std::size_t n = 0; n <= 8; ++n) {
      for (const auto& s : all_strings(n, sigma)) {
        const auto base = prev_encode(s);
        for (const auto& f : perms) REQUIRE(prev_encode(f.apply(s)) == base);
      }
    }
  }
}

TEST_CASE("prev_encode_window matches encoding the slice") {
  const auto s = parse_pstring("abcabbacbca");
  const auto whole = prev_encode(s);
  for (std::size_t i = 0; i <= s.size(); ++i) {
    for (std::size_t len = 0; i + len <= s.size(); ++len) {
      CHECK(prev_encode_window(whole, i, len) == prev_encode(s.slice(i, len)));
    }
  }
  CHECK_THROWS_AS(prev_encode_window(whole, 5, 10), DomainError);
}

TEST_CASE("bijection_compose") {
  const auto g = Bijection(std::vector<Symbol>{2, 0, 1});
  CHECK(compose(Bijection::identity(3), g) == g);
  CHECK(compose(g, Bijection::identity(3)) == g);

  const auto f01 = Bijection::transposition(3, 0, 1);
  const auto f12 = Bijection::transposition(3, 1, 2);
  CHECK(compose(f01, f12) != compose(f12, f01));
  CHECK(compose(f01, f12)(2) == f01(f12(2)));

  CHECK(compose(g, g.inverse()).is_identity());
  CHECK(compose(g.inverse(), g).is_identity());
  CHECK_THROWS_AS(compose(Bijection::identity(2), Bijection::identity(3)), DomainError);
}

TEST_CASE("bijection construction and powers") {
  CHECK_THROWS_AS(Bijection(std::vector<Symbol>{0, 0}), DomainError);
  CHECK_THROWS_AS(Bijection(std::vector<Symbol>{0, 2}), DomainError);
  const auto c = Bijection::cycle(4, {0, 1, 2});
  CHECK(c.power(3).is_identity());
  CHECK(c.power(-1) == c.inverse());
  CHECK(c.power(4) == c);
  CHECK(format_cycles(c) == "(a b c)");
  CHECK(format_cycles(Bijection::identity(3)) == "()");
  CHECK(all_permutations(4).size() == 24);
}

TEST_CASE("permutation_parity") {
  CHECK(permutation_parity(Bijection::identity(4)) == Parity::even);
  CHECK(permutation_parity(Bijection::transposition(2, 0, 1)) == Parity::odd);
  CHECK(permutation_parity(Bijection::cycle(3, {0, 1, 2})) == Parity::even);
  CHECK(permutation_parity(Bijection::cycle(4, {0, 1, 2, 3})) == Parity::odd);
}

TEST_CASE("parity is a homomorphism on random permutation pairs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const int sigma = 1 + static_cast<int>(rng() % 9);
    auto random_perm = [&] {
      std::vector<Symbol> image(static_cast<std::size_t>(sigma));
      for (int i = 0; i < sigma; ++i) image[static_cast<std::size_t>(i)] = static_cast<Symbol>(i);
      std::shuffle(image.begin(), image.end(), rng);
      return Bijection(image);
    };
    const auto f = random_perm();
    const auto g = random_perm();
    CHECK(permutation_parity(compose(f, g)) == (permutation_parity(f) ^ permutation_parity(g)));
  }
}

TEST_CASE("partial bijection binding, completion and extension count") {
  PartialBijection m;
  CHECK(m.bind(0, 1));
  CHECK(m.bind(0, 1));
  CHECK_FALSE(m.bind(0, 2));
  CHECK_FALSE(m.bind(2, 1));
  CHECK(m.bind(1, 0));
  CHECK(m.size() == 2);
  CHECK(format_partial(m) == "{a->b, b->a}");
  CHECK(m.extension_count(4) == 2);
  CHECK(m.extension_count(2) == 1);

  std::vector<Bijection> completions;
  m.for_each_completion(4, [&](const Bijection& f) {
    completions.push_back(f);
    return true;
  });
  REQUIRE(completions.size() == 2);
  for (const auto& f : completions) CHECK(m.extended_by(f));
  CHECK(completions[0] != completions[1]);
}

TEST_CASE("canonical enumeration yields one representative per renaming class") {
  // Restricted-growth strings of length n with at most k blocks: sum of Stirling numbers.
  CHECK(canonical_strings(4, 2).size() == 1 + 2 + 4 + 8);
  std::size_t count = 0;
  for_each_canonical(6, 3, [&](const PString& s) {
    CHECK(is_canonical(s.symbols()));
    ++count;
  });
  CHECK(count == 1 + 31 + 90);  // S(6,1)+S(6,2)+S(6,3)

  for (const auto& s : all_strings(5, 3)) {
    const auto c = canonicalize(s);
    CHECK(is_canonical(c.symbols()));
    CHECK(prev_encode(c) == prev_encode(s));
  }
  CHECK(canonicalize(parse_pstring("cab")) == parse_pstring("abc"));
}
