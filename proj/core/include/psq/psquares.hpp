#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "psq/prev_encoding.hpp"
#include "psq/pstring.hpp"

namespace psq {

/// One parameterized square s[start .. start + 2*half_len - 1] (1-based).
struct SquareOccurrence {
  std::size_t start = 0;
  std::size_t half_len = 0;
  bool is_standard = false;  // both halves equal as strings

  std::size_t length() const noexcept { return 2 * half_len; }

  friend bool operator==(const SquareOccurrence&, const SquareOccurrence&) = default;
  friend auto operator<=>(const SquareOccurrence&, const SquareOccurrence&) = default;
};

/// Identifies the ~-class of a square substring by its prev-encoding.
struct ClassKey {
  PrevEncoding key;

  friend bool operator==(const ClassKey&, const ClassKey&) = default;
  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

/// All squares of one ~-class that occur in a string.
struct SquareClass {
  ClassKey key;
  std::vector<PString> members;  // distinct square strings, ascending
  std::vector<SquareOccurrence> occurrences;
  bool has_unequal_halves = false;  // counted by PS'
};

/// PS, PS' and the unique square prefixes of one string, computed together.
struct SquareProfile {
  std::size_t ps = 0;
  std::size_t ps_prime = 0;
  std::vector<std::size_t> unique_square_prefixes;
};

/// |w| even and nonzero, and the two halves are ~.
bool is_psquare(const PString& w);

/// Every square occurrence, ordered by (start, half_len).
std::vector<SquareOccurrence> enumerate_psquares(const PString& s);

/// The class key of one occurrence inside s.
ClassKey class_key(const PString& s, const SquareOccurrence& occ);

/// Occurrences grouped by class, ordered by square length and then by the
/// smallest member string.
std::vector<SquareClass> classify_psquares(const PString& s);

/// PS(s): the number of ~-classes among square substrings.
std::size_t count_nonequiv_psquares(const PString& s);

/// PS'(s): classes having at least one member with unequal halves.
std::size_t count_nonequiv_proper_psquares(const PString& s);

/// Even lengths L such that s[1..L] is a square and no i > 1 has
/// s[i..i+L-1] ~ s[1..L]. Ascending.
std::vector<std::size_t> prefix_psquares_without_other_occurrence(const PString& s);

/// Single-pass computation of the three quantities above; this is the path
/// the exhaustive scans use.
SquareProfile profile_psquares(SymbolSpan s);

}  // namespace psq
