#pragma once

#include <cstdint>
#include <optional>

#include "psq/bijection.hpp"
#include "psq/pstring.hpp"

namespace psq {

/// The part of a renaming x -> y that the two strings pin down.
struct EquivWitness {
  PartialBijection forced;  // Alp(x) onto Alp(y)
  /// Full permutations of the common ambient alphabet extending `forced`.
  std::uint64_t extension_count = 0;
};

/// x ~ y on raw symbol spans: equal lengths and the position-wise map
/// x[i] -> y[i] is a well-defined injection.
bool p_equivalent(SymbolSpan x, SymbolSpan y) noexcept;

/// x ~ y. Strings of different lengths are simply not equivalent.
bool p_equivalent(const PString& x, const PString& y);

/// The forced map {x[i] -> y[i]} if x ~ y, otherwise nullopt. The ambient
/// alphabet is max(x.sigma(), y.sigma()). Throws DomainError if |x| != |y|.
std::optional<EquivWitness> recover_witness(const PString& x, const PString& y);

/// Forced map on raw spans (no length check beyond the shorter span).
std::optional<PartialBijection> forced_map(SymbolSpan x, SymbolSpan y) noexcept;

}  // namespace psq
