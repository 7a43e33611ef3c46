#include "psq/pperiod.hpp"

#include "psq/error.hpp"
#include "psq/pequiv.hpp"

namespace psq {

bool has_pperiod(SymbolSpan s, std::size_t p) noexcept {
  const auto overlap = s.size() - p;
  return p_equivalent(s.first(overlap), s.subspan(p, overlap));
}

std::optional<PPeriodWitness> is_pperiod(const PString& s, std::size_t p) {
  if (p < 1 || p > s.size()) {
    throw DomainError("p-period candidate " + std::to_string(p) + " outside [1, " + std::to_string(s.size()) +
                      "]");
  }
  if (!has_pperiod(s.symbols(), p)) return std::nullopt;
  const auto overlap = s.size() - p;
  auto forced = forced_map(s.symbols().first(overlap), s.symbols().subspan(p, overlap));
  return PPeriodWitness{p, *forced};
}

std::size_t smallest_pperiod(const PString& s) {
  if (s.empty()) throw DomainError("the empty string has no p-period");
  for (std::size_t p = 1; p < s.size(); ++p) {
    if (has_pperiod(s.symbols(), p)) return p;
  }
  return s.size();
}

std::vector<std::size_t> all_pperiods(const PString& s) {
  std::vector<std::size_t> out;
  for (std::size_t p = 1; p <= s.size(); ++p) {
    if (has_pperiod(s.symbols(), p)) out.push_back(p);
  }
  return out;
}

}  // namespace psq
