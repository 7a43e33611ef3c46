#include "psq/psquares.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "psq/pequiv.hpp"

namespace psq {

namespace {

using Offsets = std::vector<std::uint32_t>;

// Window offsets are derived from the whole-string encoding: a back-reference
// reaching before the window start reads as a first occurrence.
inline std::uint32_t window_offset(const Offsets& d, std::size_t begin, std::size_t t) noexcept {
  const auto v = d[begin + t];
  return v <= t ? v : 0;
}

bool windows_equivalent(const Offsets& d, std::size_t a, std::size_t b, std::size_t len) noexcept {
  for (std::size_t t = 0; t < len; ++t) {
    if (window_offset(d, a, t) != window_offset(d, b, t)) return false;
  }
  return true;
}

void window_key(const Offsets& d, std::size_t begin, std::size_t len, Offsets& out) {
  out.resize(len);
  for (std::size_t t = 0; t < len; ++t) out[t] = window_offset(d, begin, t);
}

bool halves_equal(SymbolSpan s, std::size_t begin, std::size_t half) noexcept {
  return std::equal(s.begin() + static_cast<std::ptrdiff_t>(begin),
                    s.begin() + static_cast<std::ptrdiff_t>(begin + half),
                    s.begin() + static_cast<std::ptrdiff_t>(begin + half));
}

}  // namespace

bool is_psquare(const PString& w) {
  if (w.empty() || w.size() % 2 != 0) return false;
  const auto half = w.size() / 2;
  return p_equivalent(w.symbols().first(half), w.symbols().subspan(half));
}

std::vector<SquareOccurrence> enumerate_psquares(const PString& s) {
  const auto d = prev_encode(s).offsets;
  const auto n = s.size();
  std::vector<SquareOccurrence> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t h = 1; i + 2 * h <= n; ++h) {
      if (windows_equivalent(d, i, i + h, h)) {
        out.push_back({i + 1, h, halves_equal(s.symbols(), i, h)});
      }
    }
  }
  return out;
}

ClassKey class_key(const PString& s, const SquareOccurrence& occ) {
  return ClassKey{prev_encode(s.slice(occ.start - 1, occ.length()))};
}

std::vector<SquareClass> classify_psquares(const PString& s) {
  std::map<ClassKey, SquareClass> by_key;
  std::map<ClassKey, std::set<PString>> members;
  for (const auto& occ : enumerate_psquares(s)) {
    auto key = class_key(s, occ);
    auto& cls = by_key[key];
    cls.key = key;
    cls.occurrences.push_back(occ);
    cls.has_unequal_halves = cls.has_unequal_halves || !occ.is_standard;
    members[key].insert(s.slice(occ.start - 1, occ.length()));
  }
  std::vector<SquareClass> out;
  for (auto& [key, cls] : by_key) {
    const auto& m = members[key];
    cls.members.assign(m.begin(), m.end());
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const SquareClass& a, const SquareClass& b) {
    return a.members.front() < b.members.front();
  });
  return out;
}

SquareProfile profile_psquares(SymbolSpan s) {
  const auto d = prev_encode(s).offsets;
  const auto n = s.size();
  SquareProfile profile;

  struct Entry {
    Offsets key;
    bool unequal;
  };
  std::vector<Entry> entries;
  for (std::size_t h = 1; 2 * h <= n; ++h) {
    entries.clear();
    for (std::size_t i = 0; i + 2 * h <= n; ++i) {
      if (!windows_equivalent(d, i, i + h, h)) continue;
      Entry e;
      window_key(d, i, 2 * h, e.key);
      e.unequal = !halves_equal(s, i, h);
      entries.push_back(std::move(e));
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.key < b.key; });
    for (std::size_t lo = 0; lo < entries.size();) {
      std::size_t hi = lo;
      bool unequal = false;
      for (; hi < entries.size() && entries[hi].key == entries[lo].key; ++hi) {
        if (entries[hi].unequal) unequal = true;
      }
      ++profile.ps;
      if (unequal) ++profile.ps_prime;
      lo = hi;
    }

    if (windows_equivalent(d, 0, h, h)) {
      const auto len = 2 * h;
      bool unique = true;
      for (std::size_t i = 1; i + len <= n && unique; ++i) unique = !windows_equivalent(d, 0, i, len);
      if (unique) profile.unique_square_prefixes.push_back(len);
    }
  }
  return profile;
}

std::size_t count_nonequiv_psquares(const PString& s) { return profile_psquares(s.symbols()).ps; }

std::size_t count_nonequiv_proper_psquares(const PString& s) { return profile_psquares(s.symbols()).ps_prime; }

std::vector<std::size_t> prefix_psquares_without_other_occurrence(const PString& s) {
  return profile_psquares(s.symbols()).unique_square_prefixes;
}

}  // namespace psq
