#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "psq/pstring.hpp"

namespace psq {

/// Renaming-invariant canonical form of a string.
///
/// offsets[i] is the distance back to the previous occurrence of the symbol
/// at i, or 0 when i holds its first occurrence. Two strings of equal length
/// are parameterized equivalent iff their encodings are equal.
struct PrevEncoding {
  std::vector<std::uint32_t> offsets;

  std::size_t size() const noexcept { return offsets.size(); }

  friend bool operator==(const PrevEncoding&, const PrevEncoding&) = default;
  friend auto operator<=>(const PrevEncoding&, const PrevEncoding&) = default;
};

PrevEncoding prev_encode(SymbolSpan symbols);
inline PrevEncoding prev_encode(const PString& s) { return prev_encode(s.symbols()); }

/// Encoding of symbols[offset, offset+count) derived from the whole-string
/// encoding `whole` without re-scanning: a back-reference that leaves the
/// window becomes 0.
PrevEncoding prev_encode_window(const PrevEncoding& whole, std::size_t offset, std::size_t count);

/// Comma-separated offsets, e.g. "0,1,0,1".
std::string format_encoding(const PrevEncoding& e);

}  // namespace psq
