#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "psq/pstring.hpp"

namespace psq {

/// (c1 ... c_{sigma-1})^2 c_sigma (c2 ... c_sigma)^2 c1 with c_i = i-1:
/// a string of length 4*sigma - 2 with exactly sigma square prefixes that
/// occur nowhere else. Throws DomainError unless 2 <= sigma <= 64.
PString lower_bound_string(int sigma);

struct LowerBoundCheck {
  PString string;
  std::vector<std::size_t> prefix_lengths;
  bool verified = false;  // prefix_lengths.size() == sigma
};

LowerBoundCheck check_lower_bound(int sigma);

/// True iff the construction has exactly sigma qualifying prefixes.
bool verify_lower_bound(int sigma);

enum class Bound {
  sigma_n,          // PS(s) < |Alp(s)| * |s|
  prefix_squares,   // at most |Alp(s)| unique square prefixes
  conjecture,       // PS(s) < |s|
};

std::string_view to_string(Bound b) noexcept;

struct Violation {
  PString string;
  Bound bound{};
  std::size_t ps = 0;
  std::size_t prefix_count = 0;
};

/// Largest PS over canonical strings of one (length, alphabet size) cell.
struct CellMaximum {
  std::size_t n = 0;
  int sigma = 0;
  std::size_t max_ps = 0;
  PString witness;
};

struct ScanReport {
  std::size_t max_n = 0;
  int max_sigma = 0;
  std::uint64_t strings_checked = 0;

  // Maxima keep the first witness in (length, lexicographic) order.
  std::size_t best_ratio_ps = 0;  // PS/|s| maximized as an exact fraction
  std::size_t best_ratio_n = 1;
  PString best_ratio_witness;

  std::size_t max_prefix_count = 0;
  PString max_prefix_witness;

  /// max over scanned strings of PS(s) - |s|; negative while PS(s) < n holds.
  long long conjecture_margin = 0;
  PString conjecture_witness;

  std::vector<Violation> violations;
  std::vector<CellMaximum> cells;  // ordered by (n, sigma)

  double max_ps_ratio() const noexcept {
    return static_cast<double>(best_ratio_ps) / static_cast<double>(best_ratio_n);
  }
};

/// Every canonical string with 1 <= |s| <= max_n and at most max_sigma
/// distinct symbols. Theorem bounds and the PS(s) < n conjecture are
/// recorded as violations when they fail. `threads` = 0 uses the hardware
/// concurrency; the report does not depend on it.
/// Throws DomainError unless max_n >= 1 and 1 <= max_sigma <= 64.
ScanReport exhaustive_bound_scan(std::size_t max_n, int max_sigma, unsigned threads = 0);

struct MaximizerResult {
  PString best;
  std::size_t ps = 0;
  std::uint64_t steps = 0;
  std::uint64_t restarts = 0;
};

/// Hill climbing over single-position mutations maximizing PS(s) for
/// |s| = n over {0..sigma-1}. Moves with equal PS are accepted; after
/// `stall_window` steps without improvement the walk restarts from a fresh
/// random string. Deterministic in `seed`.
/// Throws DomainError unless n >= 2 and 1 <= sigma <= 64.
MaximizerResult heuristic_maximizer(std::size_t n, int sigma, std::uint64_t budget, std::uint64_t seed,
                                    std::uint64_t stall_window = 2000);

}  // namespace psq
