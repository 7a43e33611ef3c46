#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "psq/pstring.hpp"

namespace psq {

/// True iff symbols first occur in increasing id order starting at 0
/// (a restricted-growth string). Every renaming class has exactly one.
bool is_canonical(SymbolSpan symbols) noexcept;

/// Renames symbols by order of first occurrence; sigma becomes |Alp(s)|.
PString canonicalize(const PString& s);

/// Visits, in lexicographic order, every canonical string of exactly
/// `length` symbols using at most `max_sigma` distinct symbols. Each string
/// carries sigma = its number of distinct symbols.
void for_each_canonical(std::size_t length, int max_sigma, const std::function<void(const PString&)>& visit);

/// All canonical strings with 1 <= |s| <= max_length, ordered by length
/// and then lexicographically.
std::vector<PString> canonical_strings(std::size_t max_length, int max_sigma);

/// Every string over {0..sigma-1} of exactly `length` symbols, lexicographic.
std::vector<PString> all_strings(std::size_t length, int sigma);

}  // namespace psq
