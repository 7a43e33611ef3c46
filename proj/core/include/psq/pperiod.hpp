#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "psq/bijection.hpp"
#include "psq/pstring.hpp"

namespace psq {

/// p |-_f s, with f reduced to the pairs it is forced to contain:
/// forced(s[i]) = s[i+p] for 1 <= i <= |s|-p.
struct PPeriodWitness {
  std::size_t p = 0;
  PartialBijection forced;
};

/// Span form of the p-period test, 1 <= p <= |s| assumed; p = |s| always holds.
bool has_pperiod(SymbolSpan s, std::size_t p) noexcept;

/// Witness iff s[1..|s|-p] ~ s[p+1..|s|]. Throws DomainError unless 1 <= p <= |s|.
std::optional<PPeriodWitness> is_pperiod(const PString& s, std::size_t p);

/// p(s), counting p = |s| as a (vacuous) period. Throws DomainError on the empty string.
std::size_t smallest_pperiod(const PString& s);

/// Every p-period in 1..|s|, ascending; always ends with |s|. Empty for ε.
std::vector<std::size_t> all_pperiods(const PString& s);

}  // namespace psq
