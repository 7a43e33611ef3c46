#include "psq/extremal.hpp"

#include <algorithm>
#include <optional>
#include <thread>

#include "psq/canonical.hpp"
#include "psq/error.hpp"
#include "psq/psquares.hpp"
#include "rng.hpp"

namespace psq {

PString lower_bound_string(int sigma) {
  if (sigma < 2 || sigma > kMaxSigma) {
    throw DomainError("the lower-bound construction needs 2 <= sigma <= 64, got " + std::to_string(sigma));
  }
  std::vector<Symbol> out;
  for (int rep = 0; rep < 2; ++rep) {
    for (int c = 0; c < sigma - 1; ++c) out.push_back(static_cast<Symbol>(c));
  }
  out.push_back(static_cast<Symbol>(sigma - 1));
  for (int rep = 0; rep < 2; ++rep) {
    for (int c = 1; c < sigma; ++c) out.push_back(static_cast<Symbol>(c));
  }
  out.push_back(0);
  return PString(std::move(out), sigma);
}

LowerBoundCheck check_lower_bound(int sigma) {
  LowerBoundCheck out;
  out.string = lower_bound_string(sigma);
  out.prefix_lengths = prefix_psquares_without_other_occurrence(out.string);
  out.verified = out.prefix_lengths.size() == static_cast<std::size_t>(sigma);
  return out;
}

bool verify_lower_bound(int sigma) { return check_lower_bound(sigma).verified; }

std::string_view to_string(Bound b) noexcept {
  switch (b) {
    case Bound::sigma_n: return "sigma_n";
    case Bound::prefix_squares: return "prefix_squares";
    case Bound::conjecture: return "conjecture";
  }
  return "unknown";
}

namespace {

struct ScanState {
  std::size_t max_n;
  int max_sigma;
  std::uint64_t strings = 0;
  std::size_t ratio_ps = 0, ratio_n = 1;
  std::optional<PString> ratio_witness;
  std::size_t prefix_count = 0;
  std::optional<PString> prefix_witness;
  std::optional<long long> margin;
  PString margin_witness;
  std::vector<Violation> violations;
  std::vector<std::optional<CellMaximum>> cells;

  ScanState(std::size_t n, int sigma)
      : max_n(n), max_sigma(sigma), cells((n + 1) * static_cast<std::size_t>(sigma + 1)) {}

  std::optional<CellMaximum>& cell(std::size_t n, int sigma) {
    return cells[n * static_cast<std::size_t>(max_sigma + 1) + static_cast<std::size_t>(sigma)];
  }

  // Strict improvements only, so the earliest witness survives.
  void offer_ratio(std::size_t ps, std::size_t n, const PString& s) {
    if (!ratio_witness || ps * ratio_n > ratio_ps * n) {
      ratio_ps = ps;
      ratio_n = n;
      ratio_witness = s;
    }
  }
  void offer_prefix(std::size_t count, const PString& s) {
    if (!prefix_witness || count > prefix_count) {
      prefix_count = count;
      prefix_witness = s;
    }
  }
  void offer_margin(long long m, const PString& s) {
    if (!margin || m > *margin) {
      margin = m;
      margin_witness = s;
    }
  }
  void offer_cell(std::size_t n, int sigma, std::size_t ps, const PString& s) {
    auto& c = cell(n, sigma);
    if (!c || ps > c->max_ps) c = CellMaximum{n, sigma, ps, s};
  }

  void visit(const PString& s) {
    ++strings;
    const auto profile = profile_psquares(s.symbols());
    const auto n = s.size();
    const int sigma = s.alphabet_size();
    const auto prefixes = profile.unique_square_prefixes.size();
    if (profile.ps >= static_cast<std::size_t>(sigma) * n) violations.push_back({s, Bound::sigma_n, profile.ps, prefixes});
    if (prefixes > static_cast<std::size_t>(sigma)) violations.push_back({s, Bound::prefix_squares, profile.ps, prefixes});
    if (profile.ps >= n) violations.push_back({s, Bound::conjecture, profile.ps, prefixes});
    offer_ratio(profile.ps, n, s);
    offer_prefix(prefixes, s);
    offer_margin(static_cast<long long>(profile.ps) - static_cast<long long>(n), s);
    offer_cell(n, sigma, profile.ps, s);
  }

  // `later` covers strings enumerated after ours.
  void merge(ScanState&& later) {
    strings += later.strings;
    if (later.ratio_witness) offer_ratio(later.ratio_ps, later.ratio_n, *later.ratio_witness);
    if (later.prefix_witness) offer_prefix(later.prefix_count, *later.prefix_witness);
    if (later.margin) offer_margin(*later.margin, later.margin_witness);
    for (auto& v : later.violations) violations.push_back(std::move(v));
    for (auto& c : later.cells) {
      if (c) offer_cell(c->n, c->sigma, c->max_ps, c->witness);
    }
  }
};

struct Partition {
  std::vector<Symbol> prefix;
  int used;
  std::size_t length;
};

void extend(std::vector<Symbol>& buf, std::size_t pos, int used, int max_sigma, ScanState& state) {
  if (pos == buf.size()) {
    state.visit(PString(buf, used));
    return;
  }
  const int limit = std::min(used + 1, max_sigma);
  for (int c = 0; c < limit; ++c) {
    buf[pos] = static_cast<Symbol>(c);
    extend(buf, pos + 1, c == used ? used + 1 : used, max_sigma, state);
  }
}

constexpr std::size_t kPartitionDepth = 6;

}  // namespace

ScanReport exhaustive_bound_scan(std::size_t max_n, int max_sigma, unsigned threads) {
  if (max_n < 1) throw DomainError("max_n must be at least 1");
  if (max_sigma < 1 || max_sigma > kMaxSigma) throw DomainError("max_sigma must lie in [1, 64]");

  // Canonical prefixes of each length split the space into ordered partitions.
  std::vector<Partition> partitions;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for_each_canonical(std::min(n, kPartitionDepth), max_sigma, [&](const PString& prefix) {
      partitions.push_back({{prefix.symbols().begin(), prefix.symbols().end()}, prefix.sigma(), n});
    });
  }

  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  const auto workers = std::min<std::size_t>(threads ? threads : hw, partitions.size());
  std::vector<ScanState> parts(workers, ScanState(max_n, max_sigma));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const auto begin = partitions.size() * w / workers;
        const auto end = partitions.size() * (w + 1) / workers;
        for (auto i = begin; i < end; ++i) {
          const auto& part = partitions[i];
          std::vector<Symbol> buf(part.length);
          std::copy(part.prefix.begin(), part.prefix.end(), buf.begin());
          extend(buf, part.prefix.size(), part.used, max_sigma, parts[w]);
        }
      });
    }
  }

  ScanState total(max_n, max_sigma);
  for (auto& part : parts) total.merge(std::move(part));

  ScanReport report;
  report.max_n = max_n;
  report.max_sigma = max_sigma;
  report.strings_checked = total.strings;
  report.best_ratio_ps = total.ratio_ps;
  report.best_ratio_n = total.ratio_n;
  report.best_ratio_witness = total.ratio_witness.value_or(PString());
  report.max_prefix_count = total.prefix_count;
  report.max_prefix_witness = total.prefix_witness.value_or(PString());
  report.conjecture_margin = total.margin.value_or(0);
  report.conjecture_witness = total.margin_witness;
  report.violations = std::move(total.violations);
  for (auto& c : total.cells) {
    if (c) report.cells.push_back(std::move(*c));
  }
  return report;
}

MaximizerResult heuristic_maximizer(std::size_t n, int sigma, std::uint64_t budget, std::uint64_t seed,
                                    std::uint64_t stall_window) {
  if (n < 2) throw DomainError("maximizer needs n >= 2");
  if (sigma < 1 || sigma > kMaxSigma) throw DomainError("maximizer needs 1 <= sigma <= 64");

  detail::Rng rng(seed);
  const auto random_start = [&] {
    std::vector<Symbol> symbols(n);
    for (auto& c : symbols) c = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(sigma)));
    return PString(std::move(symbols), sigma);
  };
  const auto score = [](const PString& s) { return profile_psquares(s.symbols()).ps; };

  MaximizerResult result;
  PString current = random_start();
  std::size_t current_ps = score(current);
  result.best = current;
  result.ps = current_ps;
  std::uint64_t stalled = 0;

  for (; result.steps < budget; ++result.steps) {
    if (stalled >= stall_window || sigma == 1) {
      current = random_start();
      current_ps = score(current);
      stalled = 0;
      ++result.restarts;
    } else {
      std::vector<Symbol> symbols(current.symbols().begin(), current.symbols().end());
      const auto pos = rng.below(n);
      auto replacement = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(sigma - 1)));
      if (replacement >= symbols[pos]) ++replacement;
      symbols[pos] = replacement;
      PString candidate(std::move(symbols), sigma);
      const auto candidate_ps = score(candidate);
      if (candidate_ps >= current_ps) {
        stalled = candidate_ps > current_ps ? 0 : stalled + 1;
        current = std::move(candidate);
        current_ps = candidate_ps;
      } else {
        ++stalled;
      }
    }
    if (current_ps > result.ps) {
      result.ps = current_ps;
      result.best = current;
    }
  }
  return result;
}

}  // namespace psq
