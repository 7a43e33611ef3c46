#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace psq {

using Symbol = std::uint8_t;

/// Largest supported ambient alphabet; alphabets are handled as 64-bit masks.
inline constexpr int kMaxSigma = 64;

using SymbolSpan = std::span<const Symbol>;

/// Bit `a` is set iff symbol `a` occurs in `symbols`.
inline std::uint64_t alphabet_mask(SymbolSpan symbols) noexcept {
  std::uint64_t mask = 0;
  for (Symbol c : symbols) mask |= std::uint64_t{1} << c;
  return mask;
}

inline int alphabet_size(SymbolSpan symbols) noexcept {
  return std::popcount(alphabet_mask(symbols));
}

/// A string over the dense alphabet {0, ..., sigma-1}.
///
/// `sigma` is the declared ambient alphabet size and may exceed the number
/// of distinct symbols that actually occur (see `alphabet_size()`).
/// Indexing through `operator[]` and `slice` is 0-based; `substring` takes
/// the 1-based inclusive positions used by every report.
class PString {
 public:
  PString() = default;

  /// Throws DomainError if a symbol is >= sigma or sigma is outside [0, 64].
  PString(std::vector<Symbol> symbols, int sigma);

  /// Ambient size is the smallest one that admits every symbol (max id + 1).
  static PString minimal(std::vector<Symbol> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  int sigma() const noexcept { return sigma_; }
  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }

  SymbolSpan symbols() const noexcept { return symbols_; }
  std::uint64_t alphabet() const noexcept { return alphabet_mask(symbols_); }
  int alphabet_size() const noexcept { return psq::alphabet_size(symbols_); }

  /// 0-based offset, `count` symbols; keeps the ambient sigma.
  PString slice(std::size_t offset, std::size_t count) const;

  /// s[first..last], 1-based and inclusive; first > last yields the empty string.
  PString substring(std::size_t first, std::size_t last) const;

  /// Same ambient alphabet, with `sigma` widened to `new_sigma`.
  PString with_sigma(int new_sigma) const;

  friend bool operator==(const PString&, const PString&) = default;

  /// Shorter strings first, then lexicographic by symbol id, then by sigma.
  friend std::strong_ordering operator<=>(const PString& a, const PString& b);

 private:
  std::vector<Symbol> symbols_;
  int sigma_ = 0;
};

/// Concatenation; the result's sigma is the larger of the two.
PString concat(const PString& a, const PString& b);

/// Reads `aabbac`, `0,0,1`, or either with an `@sigma` suffix (`aab@4`).
///
/// Letters map a->0, b->1, ... The ambient size defaults to max id + 1 and is
/// replaced by the `@` suffix or `sigma_override` (the override wins).
/// Throws ParseError on malformed text and DomainError if the requested
/// sigma does not cover every symbol.
PString parse_pstring(std::string_view text, std::optional<int> sigma_override = std::nullopt);

/// Inverse of parse_pstring: letters when sigma <= 26, comma-separated ids
/// otherwise, with an `@sigma` suffix whenever sigma differs from max id + 1.
std::string format_pstring(const PString& s);

/// Just the symbols, never an `@` suffix.
std::string format_symbols(SymbolSpan symbols, int sigma);

}  // namespace psq
