#pragma once

#include <cstddef>
#include <vector>

#include "psq/pstring.hpp"
#include "psq/psquares.hpp"

/// Definition-level reference implementations.
///
/// Nothing here touches prev-encodings: equivalence is decided by searching
/// for a renaming directly, and square classes by pairwise comparison. These
/// are slow and exist to cross-check the fast paths.
namespace psq::oracle {

/// Backtracking search for a bijection on {0..sigma-1} (sigma = the larger
/// ambient size) mapping x onto y position-wise.
bool p_equivalent(const PString& x, const PString& y);

/// p-period test through oracle::p_equivalent on prefix and suffix.
bool has_pperiod(const PString& s, std::size_t p);

/// Double loop over all substrings; classes found by pairwise comparison
/// against one representative per class.
SquareProfile profile_psquares(const PString& s);

}  // namespace psq::oracle
