#include "psq/lemma_lab.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>

#include "psq/canonical.hpp"
#include "psq/error.hpp"
#include "psq/pequiv.hpp"
#include "psq/pperiod.hpp"
#include "rng.hpp"

namespace psq {

std::string_view to_string(LemmaId id) noexcept {
  switch (id) {
    case LemmaId::L3_commuting_gcd: return "L3_commuting_gcd";
    case LemmaId::L4_prior_gcd: return "L4_prior_gcd";
    case LemmaId::L5_prior_alphabet: return "L5_prior_alphabet";
    case LemmaId::L6_substring_alphabet: return "L6_substring_alphabet";
    case LemmaId::C7_corollary: return "C7_corollary";
    case LemmaId::L8_commute_from_agreement: return "L8_commute_from_agreement";
    case LemmaId::L9_tight_gcd: return "L9_tight_gcd";
    case LemmaId::L_overlap: return "L_overlap";
    case LemmaId::L_extension: return "L_extension";
  }
  return "unknown";
}

namespace {

using ll = long long;

ll as_ll(std::size_t v) { return static_cast<ll>(v); }

bool period_in_range(SymbolSpan s, std::size_t p) { return p >= 1 && p <= s.size() && has_pperiod(s, p); }

void check_interval(const PString& s, Interval range) {
  if (range.first < 1 || range.first > range.last || range.last > s.size()) {
    throw DomainError("interval [" + std::to_string(range.first) + ".." + std::to_string(range.last) +
                      "] is not a non-empty substring of a string of length " + std::to_string(s.size()));
  }
}

int substring_alphabet(const PString& s, Interval range) {
  return alphabet_size(s.symbols().subspan(range.first - 1, range.length()));
}

// True iff some completion of f and some completion of g to permutations of
// {0..sigma-1} commute.
bool commuting_completions(const PartialBijection& f, const PartialBijection& g, int sigma) {
  std::vector<Bijection> g_completions;
  g.for_each_completion(sigma, [&](const Bijection& b) {
    g_completions.push_back(b);
    return true;
  });
  bool found = false;
  f.for_each_completion(sigma, [&](const Bijection& fb) {
    for (const auto& gb : g_completions) {
      if (compose(fb, gb) == compose(gb, fb)) {
        found = true;
        return false;
      }
    }
    return true;
  });
  return found;
}

LemmaInstance make(LemmaId id, std::vector<std::pair<std::string, std::string>> inputs) {
  LemmaInstance inst;
  inst.lemma_id = id;
  inst.inputs = std::move(inputs);
  return inst;
}

void conclude(LemmaInstance& inst, bool premise, auto&& conclusion) {
  inst.premise_holds = premise;
  if (premise) inst.conclusion_holds = conclusion();
}

// p + q + min(p, q) * slack <= n, with slack possibly negative.
bool gcd_premise(std::size_t n, std::size_t p, std::size_t q, ll slack) {
  return as_ll(p) + as_ll(q) + as_ll(std::min(p, q)) * slack <= as_ll(n);
}

LemmaInstance gcd_instance(LemmaId id, const PString& s, std::size_t p, std::size_t q, ll slack) {
  auto inst = make(id, {{"s", format_pstring(s)}, {"p", std::to_string(p)}, {"q", std::to_string(q)}});
  const bool premise = period_in_range(s.symbols(), p) && period_in_range(s.symbols(), q) &&
                       gcd_premise(s.size(), p, q, slack);
  conclude(inst, premise, [&] { return has_pperiod(s.symbols(), std::gcd(p, q)); });
  return inst;
}

}  // namespace

LemmaInstance check_L3(const PString& s, std::size_t p, std::size_t q) {
  auto inst = make(LemmaId::L3_commuting_gcd,
                   {{"s", format_pstring(s)}, {"p", std::to_string(p)}, {"q", std::to_string(q)}});
  bool premise = p + q <= s.size() && p >= 1 && q >= 1;
  if (premise) {
    auto f = is_pperiod(s, p);
    auto g = is_pperiod(s, q);
    premise = f && g;
    if (premise) {
      inst.inputs.emplace_back("f_forced", format_partial(f->forced));
      inst.inputs.emplace_back("g_forced", format_partial(g->forced));
      premise = commuting_completions(f->forced, g->forced, s.sigma());
    }
  }
  conclude(inst, premise, [&] { return has_pperiod(s.symbols(), std::gcd(p, q)); });
  return inst;
}

LemmaInstance check_L4(const PString& s, std::size_t p, std::size_t q) {
  return gcd_instance(LemmaId::L4_prior_gcd, s, p, q, s.alphabet_size() - 1);
}

LemmaInstance check_L9(const PString& s, std::size_t p, std::size_t q) {
  if (s.alphabet_size() < 2) throw DomainError("the tightened gcd statement needs at least two distinct symbols");
  return gcd_instance(LemmaId::L9_tight_gcd, s, p, q, s.alphabet_size() - 2);
}

LemmaInstance check_L5(const PString& s, Interval range) {
  check_interval(s, range);
  auto inst = make(LemmaId::L5_prior_alphabet, {{"s", format_pstring(s)},
                                                {"first", std::to_string(range.first)},
                                                {"last", std::to_string(range.last)}});
  const ll sigma = s.alphabet_size();
  const ll period = as_ll(smallest_pperiod(s));
  conclude(inst, as_ll(range.length()) >= period * (sigma - 1),
           [&] { return substring_alphabet(s, range) >= sigma - 1; });
  return inst;
}

LemmaInstance check_L6(const PString& s, std::size_t p, Interval range, int k) {
  const int sigma = s.alphabet_size();
  if (k < 2 || k > sigma + 1) {
    throw DomainError("k = " + std::to_string(k) + " outside [2, " + std::to_string(sigma + 1) + "]");
  }
  check_interval(s, range);
  auto inst = make(LemmaId::L6_substring_alphabet,
                   {{"s", format_pstring(s)},
                    {"p", std::to_string(p)},
                    {"first", std::to_string(range.first)},
                    {"last", std::to_string(range.last)},
                    {"k", std::to_string(k)}});
  const bool premise = period_in_range(s.symbols(), p) && as_ll(range.length()) >= as_ll(p) * (k - 2) + 1;
  conclude(inst, premise, [&] { return substring_alphabet(s, range) >= k - 1; });
  return inst;
}

LemmaInstance check_C7(const PString& s, std::size_t p, Interval range) {
  check_interval(s, range);
  auto inst = make(LemmaId::C7_corollary, {{"s", format_pstring(s)},
                                           {"p", std::to_string(p)},
                                           {"first", std::to_string(range.first)},
                                           {"last", std::to_string(range.last)}});
  const ll sigma = s.alphabet_size();
  const bool premise = period_in_range(s.symbols(), p) && as_ll(range.length()) >= as_ll(p) * (sigma - 2) + 1;
  conclude(inst, premise, [&] { return substring_alphabet(s, range) >= sigma - 1; });
  return inst;
}

LemmaInstance check_L8(const Bijection& f, const Bijection& g, std::pair<Symbol, Symbol> excluded) {
  if (f.sigma() < 2) throw DomainError("the agreement statement needs an alphabet of size at least 2");
  if (f.sigma() != g.sigma()) throw DomainError("bijections on different alphabets");
  auto [a, b] = excluded;
  if (a == b || int{a} >= f.sigma() || int{b} >= f.sigma()) throw DomainError("invalid excluded pair");

  auto inst = make(LemmaId::L8_commute_from_agreement,
                   {{"sigma", std::to_string(f.sigma())},
                    {"f", format_cycles(f)},
                    {"g", format_cycles(g)},
                    {"excluded", format_symbols(std::vector<Symbol>{a, b}, 26)}});
  bool agree = true;
  for (int c = 0; c < f.sigma() && agree; ++c) {
    if (c == a || c == b) continue;
    const auto sym = static_cast<Symbol>(c);
    agree = f(g(sym)) == g(f(sym));
  }
  conclude(inst, agree, [&] { return compose(f, g) == compose(g, f); });
  return inst;
}

LemmaInstance check_overlap(const PString& x, const PString& y, const PString& z, std::size_t p,
                            OverlapReading reading) {
  if (x.empty() || y.empty() || z.empty()) throw DomainError("overlap components must be non-empty");
  const auto xy = concat(x, y);
  const auto yz = concat(y, z);
  const auto xyz = concat(xy, z);
  auto inst = make(LemmaId::L_overlap, {{"x", format_pstring(x)},
                                        {"y", format_pstring(y)},
                                        {"z", format_pstring(z)},
                                        {"p", std::to_string(p)},
                                        {"reading", reading == OverlapReading::joined ? "joined" : "middle"}});
  const ll sigma = reading == OverlapReading::joined ? xyz.alphabet_size() : y.alphabet_size();
  const bool premise = period_in_range(xy.symbols(), p) && period_in_range(yz.symbols(), p) &&
                       as_ll(y.size()) >= as_ll(p) * (sigma - 1) + 1;
  conclude(inst, premise, [&] { return has_pperiod(xyz.symbols(), p); });
  return inst;
}

LemmaInstance check_extension(const PString& t, std::size_t s_len, std::size_t p, std::size_t q) {
  if (s_len < 1 || s_len > t.size()) {
    throw DomainError("prefix length " + std::to_string(s_len) + " outside [1, " + std::to_string(t.size()) + "]");
  }
  auto inst = make(LemmaId::L_extension, {{"t", format_pstring(t)},
                                          {"s_len", std::to_string(s_len)},
                                          {"p", std::to_string(p)},
                                          {"q", std::to_string(q)}});
  const ll sigma = t.alphabet_size();
  const bool premise = p >= 1 && q >= 1 && q % p == 0 && period_in_range(t.symbols(), q) &&
                       period_in_range(t.symbols().first(s_len), p) &&
                       as_ll(p) * (sigma - 2) + as_ll(q) + 1 <= as_ll(s_len);
  conclude(inst, premise, [&] { return has_pperiod(t.symbols(), p); });
  return inst;
}

namespace {

constexpr std::size_t index_of(LemmaId id) { return static_cast<std::size_t>(id); }

// Probe names, created up front so every report lists them in a fixed order.
constexpr std::string_view kProbeL3NoCommuting = "periods_fit_but_no_commuting_completion";
constexpr std::string_view kProbeL5Boundary = "boundary_length";
constexpr std::string_view kProbeL8Tightness = "noncommuting_with_sigma_minus_3_agreement";
constexpr std::string_view kProbeL9Gap = "l9_premise_without_l4_premise";
constexpr std::string_view kProbeL9Mismatch = "conclusion_mismatch_with_l4";
constexpr std::string_view kProbeOverlapMiddlePremise = "middle_reading_premise";
constexpr std::string_view kProbeOverlapMiddleFail = "middle_reading_counterexample";
constexpr std::string_view kProbeOverlapNearMiss = "near_miss_failure";

class Accumulator {
 public:
  Accumulator() {
    for (auto id : kAllLemmas) reports_[index_of(id)].lemma_id = id;
    add_probe(LemmaId::L3_commuting_gcd, kProbeL3NoCommuting);
    add_probe(LemmaId::L5_prior_alphabet, kProbeL5Boundary);
    add_probe(LemmaId::L8_commute_from_agreement, kProbeL8Tightness);
    add_probe(LemmaId::L9_tight_gcd, kProbeL9Gap);
    add_probe(LemmaId::L9_tight_gcd, kProbeL9Mismatch);
    add_probe(LemmaId::L_overlap, kProbeOverlapMiddlePremise);
    add_probe(LemmaId::L_overlap, kProbeOverlapMiddleFail);
    add_probe(LemmaId::L_overlap, kProbeOverlapNearMiss);
  }

  // `build` materializes the instance; it only runs for stored counterexamples.
  void tally(LemmaId id, bool premise, bool conclusion, auto&& build) {
    auto& r = reports_[index_of(id)];
    ++r.instances_checked;
    if (!premise) return;
    ++r.premise_satisfied;
    if (conclusion) return;
    ++r.counterexample_count;
    if (r.counterexamples.size() < LemmaReport::kStoredCounterexamples) r.counterexamples.push_back(build());
  }

  void tally(const LemmaInstance& inst) {
    tally(inst.lemma_id, inst.premise_holds, inst.conclusion_holds.value_or(true), [&] { return inst; });
  }

  void hit(LemmaId id, std::string_view probe, auto&& build) {
    auto& p = find_probe(id, probe);
    ++p.count;
    if (!p.example) p.example = build();
  }

  // Appends `other`, which must cover inputs enumerated after ours.
  void merge(Accumulator&& other) {
    for (std::size_t i = 0; i < reports_.size(); ++i) {
      auto& mine = reports_[i];
      auto& theirs = other.reports_[i];
      mine.instances_checked += theirs.instances_checked;
      mine.premise_satisfied += theirs.premise_satisfied;
      mine.counterexample_count += theirs.counterexample_count;
      for (auto& ce : theirs.counterexamples) {
        if (mine.counterexamples.size() < LemmaReport::kStoredCounterexamples) mine.counterexamples.push_back(std::move(ce));
      }
      for (std::size_t j = 0; j < mine.probes.size(); ++j) {
        mine.probes[j].count += theirs.probes[j].count;
        if (!mine.probes[j].example) mine.probes[j].example = std::move(theirs.probes[j].example);
      }
    }
  }

  std::vector<LemmaReport> take() && { return {std::make_move_iterator(reports_.begin()), std::make_move_iterator(reports_.end())}; }

 private:
  void add_probe(LemmaId id, std::string_view name) { reports_[index_of(id)].probes.push_back({std::string(name), 0, {}}); }

  Probe& find_probe(LemmaId id, std::string_view name) {
    for (auto& p : reports_[index_of(id)].probes) {
      if (p.name == name) return p;
    }
    throw std::logic_error("unknown probe");
  }

  std::array<LemmaReport, kAllLemmas.size()> reports_;
};

// Period tables for one string: prefix[L][p] = p |- s[1..L], suffix[i][p] = p |- s[i..n].
struct PeriodTables {
  std::size_t n;
  std::vector<std::uint8_t> prefix;
  std::vector<std::uint8_t> suffix;
  std::vector<int> alphabet;  // alphabet[i * (n + 1) + j] = |Alp(s[i..j])|, 1-based

  explicit PeriodTables(SymbolSpan s) : n(s.size()) {
    const auto w = n + 1;
    prefix.assign(w * w, 0);
    suffix.assign(w * w, 0);
    alphabet.assign(w * w, 0);
    for (std::size_t len = 1; len <= n; ++len) {
      for (std::size_t p = 1; p <= len; ++p) prefix[len * w + p] = has_pperiod(s.first(len), p);
    }
    for (std::size_t i = 1; i <= n; ++i) {
      const auto tail = s.subspan(i - 1);
      for (std::size_t p = 1; p <= tail.size(); ++p) suffix[i * w + p] = has_pperiod(tail, p);
      std::uint64_t mask = 0;
      for (std::size_t j = i; j <= n; ++j) {
        mask |= std::uint64_t{1} << s[j - 1];
        alphabet[i * w + j] = std::popcount(mask);
      }
    }
  }

  bool prefix_period(std::size_t len, std::size_t p) const { return p >= 1 && p <= len && prefix[len * (n + 1) + p]; }
  bool suffix_period(std::size_t i, std::size_t p) const {
    return p >= 1 && p <= n - i + 1 && suffix[i * (n + 1) + p];
  }
  bool period(std::size_t p) const { return prefix_period(n, p); }
  int alpha(std::size_t i, std::size_t j) const { return alphabet[i * (n + 1) + j]; }
};

void sweep_gcd_lemmas(const PString& s, const PeriodTables& t, Accumulator& acc, const SuiteOptions& options) {
  const auto n = s.size();
  const ll sigma = s.alphabet_size();
  for (std::size_t p = 1; p <= n; ++p) {
    for (std::size_t q = 1; q <= n; ++q) {
      const bool periods = t.period(p) && t.period(q);
      const bool gcd_holds = t.period(std::gcd(p, q));

      // L3: premise includes the existence of commuting completions.
      bool l3 = periods && p + q <= n;
      if (l3) {
        const auto f = is_pperiod(s, p);
        const auto g = is_pperiod(s, q);
        l3 = commuting_completions(f->forced, g->forced, s.sigma());
        if (!l3) acc.hit(LemmaId::L3_commuting_gcd, kProbeL3NoCommuting, [&] { return check_L3(s, p, q); });
      }
      acc.tally(LemmaId::L3_commuting_gcd, l3, gcd_holds, [&] { return check_L3(s, p, q); });

      const bool l4 = options.corrupt_l4_premise ? periods && p + q <= n : periods && gcd_premise(n, p, q, sigma - 1);
      acc.tally(LemmaId::L4_prior_gcd, l4, gcd_holds, [&] {
        auto inst = check_L4(s, p, q);
        if (options.corrupt_l4_premise) {
          inst.inputs.emplace_back("premise", "corrupted");
          inst.premise_holds = true;
          inst.conclusion_holds = gcd_holds;
        }
        return inst;
      });

      if (sigma >= 2) {
        const bool l9 = periods && gcd_premise(n, p, q, sigma - 2);
        acc.tally(LemmaId::L9_tight_gcd, l9, gcd_holds, [&] { return check_L9(s, p, q); });
        const bool l4_true = periods && gcd_premise(n, p, q, sigma - 1);
        if (l9 && !l4_true) acc.hit(LemmaId::L9_tight_gcd, kProbeL9Gap, [&] { return check_L9(s, p, q); });
        if (l9 && l4_true) {
          auto tight = check_L9(s, p, q);
          if (check_L4(s, p, q).conclusion_holds != tight.conclusion_holds) {
            acc.hit(LemmaId::L9_tight_gcd, kProbeL9Mismatch, [&] { return tight; });
          }
        }
      }
    }
  }
}

void sweep_alphabet_lemmas(const PString& s, const PeriodTables& t, Accumulator& acc) {
  const auto n = s.size();
  const ll sigma = s.alphabet_size();
  ll smallest = 0;
  for (std::size_t p = 1; p <= n && smallest == 0; ++p) {
    if (t.period(p)) smallest = as_ll(p);
  }

  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      const ll len = as_ll(j - i + 1);
      const ll alpha = t.alpha(i, j);
      const Interval range{i, j};

      const bool l5 = len >= smallest * (sigma - 1);
      acc.tally(LemmaId::L5_prior_alphabet, l5, alpha >= sigma - 1, [&] { return check_L5(s, range); });
      if (l5 && len == smallest * (sigma - 1)) {
        acc.hit(LemmaId::L5_prior_alphabet, kProbeL5Boundary, [&] { return check_L5(s, range); });
      }

      for (std::size_t p = 1; p <= n; ++p) {
        const bool period = t.period(p);
        for (int k = 2; k <= sigma + 1; ++k) {
          const bool premise = period && len >= as_ll(p) * (k - 2) + 1;
          acc.tally(LemmaId::L6_substring_alphabet, premise, alpha >= k - 1,
                    [&] { return check_L6(s, p, range, k); });
        }
        const bool c7 = period && len >= as_ll(p) * (sigma - 2) + 1;
        acc.tally(LemmaId::C7_corollary, c7, alpha >= sigma - 1, [&] { return check_C7(s, p, range); });
      }
    }
  }
}

void sweep_overlap(const PString& s, const PeriodTables& t, Accumulator& acc) {
  const auto n = s.size();
  const ll sigma = s.alphabet_size();
  // x = s[1..a], y = s[a+1..b], z = s[b+1..n]
  for (std::size_t a = 1; a + 2 <= n; ++a) {
    for (std::size_t b = a + 1; b + 1 <= n; ++b) {
      const ll ylen = as_ll(b - a);
      const ll y_alpha = t.alpha(a + 1, b);
      auto build = [&](std::size_t p, OverlapReading reading) {
        return check_overlap(s.slice(0, a), s.slice(a, b - a), s.slice(b, n - b), p, reading);
      };
      for (std::size_t p = 1; p <= n; ++p) {
        const bool periods = t.prefix_period(b, p) && t.suffix_period(a + 1, p);
        const bool conclusion = t.period(p);
        const bool premise = periods && ylen >= as_ll(p) * (sigma - 1) + 1;
        acc.tally(LemmaId::L_overlap, premise, conclusion, [&] { return build(p, OverlapReading::joined); });

        if (periods && ylen >= as_ll(p) * (y_alpha - 1) + 1) {
          acc.hit(LemmaId::L_overlap, kProbeOverlapMiddlePremise, [&] { return build(p, OverlapReading::middle); });
          if (!conclusion) {
            acc.hit(LemmaId::L_overlap, kProbeOverlapMiddleFail, [&] { return build(p, OverlapReading::middle); });
          }
        }
        if (periods && ylen == as_ll(p) * (sigma - 1) && !conclusion) {
          acc.hit(LemmaId::L_overlap, kProbeOverlapNearMiss, [&] { return build(p, OverlapReading::joined); });
        }
      }
    }
  }
}

void sweep_extension(const PString& s, const PeriodTables& t, Accumulator& acc) {
  const auto n = s.size();
  const ll sigma = s.alphabet_size();
  for (std::size_t s_len = 1; s_len <= n; ++s_len) {
    for (std::size_t p = 1; p <= s_len; ++p) {
      for (std::size_t q = p; q <= n; q += p) {
        const bool premise = t.period(q) && t.prefix_period(s_len, p) &&
                             as_ll(p) * (sigma - 2) + as_ll(q) + 1 <= as_ll(s_len);
        acc.tally(LemmaId::L_extension, premise, t.period(p), [&] { return check_extension(s, s_len, p, q); });
      }
    }
  }
}

void sweep_string(const PString& s, Accumulator& acc, const SuiteOptions& options) {
  const PeriodTables tables(s.symbols());
  sweep_gcd_lemmas(s, tables, acc, options);
  sweep_alphabet_lemmas(s, tables, acc);
  sweep_overlap(s, tables, acc);
  sweep_extension(s, tables, acc);
}

void sweep_permutations(int max_sigma, Accumulator& acc) {
  for (int sigma = 2; sigma <= max_sigma; ++sigma) {
    const auto perms = all_permutations(sigma);
    for (const auto& f : perms) {
      for (const auto& g : perms) {
        const bool commute = compose(f, g) == compose(g, f);
        std::uint64_t agree = 0;
        for (int c = 0; c < sigma; ++c) {
          const auto sym = static_cast<Symbol>(c);
          if (f(g(sym)) == g(f(sym))) agree |= std::uint64_t{1} << c;
        }
        for (int a = 0; a < sigma; ++a) {
          for (int b = a + 1; b < sigma; ++b) {
            const auto others = ((std::uint64_t{1} << sigma) - 1) & ~(std::uint64_t{1} << a) & ~(std::uint64_t{1} << b);
            const bool premise = (agree & others) == others;
            const std::pair excluded{static_cast<Symbol>(a), static_cast<Symbol>(b)};
            acc.tally(LemmaId::L8_commute_from_agreement, premise, commute, [&] { return check_L8(f, g, excluded); });
          }
        }
        // Agreement on sigma-3 symbols does not force commutation.
        if (sigma == 4 && !commute && std::popcount(agree) == sigma - 3) {
          acc.hit(LemmaId::L8_commute_from_agreement, kProbeL8Tightness, [&] {
            const auto disagree = ~agree & ((std::uint64_t{1} << sigma) - 1);
            const auto first = static_cast<Symbol>(std::countr_zero(disagree));
            const auto second = static_cast<Symbol>(std::countr_zero(disagree & (disagree - 1)));
            auto inst = check_L8(f, g, {first, second});
            inst.inputs.emplace_back("agreement_size", std::to_string(std::popcount(agree)));
            return inst;
          });
        }
      }
    }
  }
}

// --- randomized phase -----------------------------------------------------

PString random_string(detail::Rng& rng, std::size_t n, int sigma) {
  std::vector<Symbol> out(n);
  if (rng.below(2) == 0 || n < 2) {
    for (auto& c : out) c = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(sigma)));
    return PString(std::move(out), sigma);
  }
  // u f(u) f^2(u) ... truncated: has p-period |u| by construction.
  const auto p = static_cast<std::size_t>(rng.between(1, n));
  const auto f = rng.permutation(sigma);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = i < p ? static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(sigma))) : f(out[i - p]);
  }
  return PString(std::move(out), sigma);
}

std::size_t random_period(detail::Rng& rng, const PString& s) {
  if (rng.below(4) != 0) {
    const auto periods = all_pperiods(s);
    return periods[rng.below(periods.size())];
  }
  return static_cast<std::size_t>(rng.between(1, s.size()));
}

Interval random_interval(detail::Rng& rng, std::size_t n) {
  auto i = static_cast<std::size_t>(rng.between(1, n));
  auto j = static_cast<std::size_t>(rng.between(1, n));
  if (i > j) std::swap(i, j);
  return {i, j};
}

LemmaInstance random_instance(LemmaId id, detail::Rng& rng, const SuiteLimits& limits) {
  const auto max_n = std::max<std::size_t>(limits.random_max_n, 3);
  const int max_sigma = std::max(limits.random_max_sigma, 2);
  const auto n = static_cast<std::size_t>(rng.between(1, max_n));
  const int sigma = static_cast<int>(rng.between(1, static_cast<std::uint64_t>(max_sigma)));

  switch (id) {
    case LemmaId::L3_commuting_gcd:
    case LemmaId::L4_prior_gcd: {
      const auto s = random_string(rng, n, sigma);
      const auto p = random_period(rng, s);
      const auto q = random_period(rng, s);
      return id == LemmaId::L3_commuting_gcd ? check_L3(s, p, q) : check_L4(s, p, q);
    }
    case LemmaId::L9_tight_gcd: {
      auto s = random_string(rng, std::max<std::size_t>(n, 2), std::max(sigma, 2));
      while (s.alphabet_size() < 2) s = random_string(rng, s.size(), s.sigma());
      const auto p = random_period(rng, s);
      const auto q = random_period(rng, s);
      return check_L9(s, p, q);
    }
    case LemmaId::L5_prior_alphabet: {
      const auto s = random_string(rng, n, sigma);
      return check_L5(s, random_interval(rng, n));
    }
    case LemmaId::L6_substring_alphabet: {
      const auto s = random_string(rng, n, sigma);
      const auto p = random_period(rng, s);
      const auto range = random_interval(rng, n);
      const int k = static_cast<int>(rng.between(2, static_cast<std::uint64_t>(s.alphabet_size()) + 1));
      return check_L6(s, p, range, k);
    }
    case LemmaId::C7_corollary: {
      const auto s = random_string(rng, n, sigma);
      return check_C7(s, random_period(rng, s), random_interval(rng, n));
    }
    case LemmaId::L8_commute_from_agreement: {
      const int size = static_cast<int>(rng.between(2, 8));
      const auto f = rng.permutation(size);
      const auto g = rng.below(2) == 0 ? rng.permutation(size) : f.power(static_cast<long long>(rng.between(0, 6)));
      const auto a = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(size)));
      auto b = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(size - 1)));
      if (b >= a) ++b;
      return check_L8(f, g, {a, b});
    }
    case LemmaId::L_overlap: {
      const auto s = random_string(rng, std::max<std::size_t>(n, 3), sigma);
      const auto len = s.size();
      const auto a = static_cast<std::size_t>(rng.between(1, len - 2));
      const auto b = static_cast<std::size_t>(rng.between(a + 1, len - 1));
      const auto p = static_cast<std::size_t>(rng.between(1, std::max<std::size_t>(1, len / 3)));
      return check_overlap(s.slice(0, a), s.slice(a, b - a), s.slice(b, len - b), p);
    }
    case LemmaId::L_extension: {
      const auto t = random_string(rng, n, sigma);
      const auto s_len = static_cast<std::size_t>(rng.between(1, n));
      const auto p = static_cast<std::size_t>(rng.between(1, s_len));
      const auto k = static_cast<std::size_t>(rng.between(1, std::max<std::size_t>(1, n / p)));
      return check_extension(t, s_len, p, k * p);
    }
  }
  throw std::logic_error("unhandled lemma id");
}

}  // namespace

std::vector<LemmaReport> run_lemma_suite(const SuiteLimits& limits, std::uint64_t seed, const SuiteOptions& options) {
  Accumulator total;

  const auto strings = limits.max_sigma > 0 ? canonical_strings(limits.max_n, limits.max_sigma) : std::vector<PString>{};
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  const auto workers = static_cast<std::size_t>(std::min<std::size_t>(limits.threads ? limits.threads : hw,
                                                                      std::max<std::size_t>(1, strings.size())));
  // Contiguous chunks merged in index order keep counterexample lists in
  // enumeration order regardless of scheduling.
  std::vector<Accumulator> parts(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const auto begin = strings.size() * w / workers;
        const auto end = strings.size() * (w + 1) / workers;
        for (auto i = begin; i < end; ++i) sweep_string(strings[i], parts[w], options);
      });
    }
  }
  for (auto& part : parts) total.merge(std::move(part));

  sweep_permutations(limits.perm_max_sigma, total);

  detail::Rng rng(seed);
  for (std::uint64_t i = 0; i < limits.random_instances; ++i) {
    total.tally(random_instance(kAllLemmas[i % kAllLemmas.size()], rng, limits));
  }
  return std::move(total).take();
}

}  // namespace psq
