#include "psq/pequiv.hpp"

#include <algorithm>
#include <array>

#include "psq/error.hpp"

namespace psq {

bool p_equivalent(SymbolSpan x, SymbolSpan y) noexcept {
  if (x.size() != y.size()) return false;
  // Streamed prev-encoding comparison: offsets must agree at every position.
  std::array<std::size_t, kMaxSigma> last_x{};
  std::array<std::size_t, kMaxSigma> last_y{};
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::size_t pos = i + 1;
    if (last_x[x[i]] != last_y[y[i]]) return false;
    last_x[x[i]] = pos;
    last_y[y[i]] = pos;
  }
  return true;
}

bool p_equivalent(const PString& x, const PString& y) { return p_equivalent(x.symbols(), y.symbols()); }

std::optional<PartialBijection> forced_map(SymbolSpan x, SymbolSpan y) noexcept {
  PartialBijection m;
  const auto n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!m.bind(x[i], y[i])) return std::nullopt;
  }
  return m;
}

std::optional<EquivWitness> recover_witness(const PString& x, const PString& y) {
  if (x.size() != y.size()) {
    throw DomainError("recover_witness needs equal lengths, got " + std::to_string(x.size()) + " and " +
                      std::to_string(y.size()));
  }
  if (!p_equivalent(x, y)) return std::nullopt;
  auto forced = forced_map(x.symbols(), y.symbols());
  const int sigma = std::max(x.sigma(), y.sigma());
  EquivWitness w{*forced, forced->extension_count(sigma)};
  return w;
}

}  // namespace psq
