#include "psq/oracle.hpp"

#include <algorithm>
#include <array>

namespace psq::oracle {

namespace {

struct Search {
  const PString& x;
  const PString& y;
  int sigma;
  std::vector<Symbol> order;  // distinct symbols of x by first occurrence
  std::array<int, kMaxSigma> image{};
  std::array<bool, kMaxSigma> used{};

  // Assign an image to order[depth] and recurse; positions holding that
  // symbol must all read the chosen image in y.
  bool assign(std::size_t depth) {
    if (depth == order.size()) return true;
    const Symbol a = order[depth];
    for (int b = 0; b < sigma; ++b) {
      if (used[b]) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < x.size() && consistent; ++i) {
        if (x[i] == a && y[i] != b) consistent = false;
      }
      if (!consistent) continue;
      used[b] = true;
      image[a] = b;
      if (assign(depth + 1)) return true;
      used[b] = false;
    }
    return false;
  }
};

}  // namespace

bool p_equivalent(const PString& x, const PString& y) {
  if (x.size() != y.size()) return false;
  Search search{x, y, std::max(x.sigma(), y.sigma()), {}, {}, {}};
  std::array<bool, kMaxSigma> seen{};
  for (Symbol c : x.symbols()) {
    if (!seen[c]) {
      seen[c] = true;
      search.order.push_back(c);
    }
  }
  return search.assign(0);
}

bool has_pperiod(const PString& s, std::size_t p) {
  const auto overlap = s.size() - p;
  return p_equivalent(s.slice(0, overlap), s.slice(p, overlap));
}

SquareProfile profile_psquares(const PString& s) {
  SquareProfile out;
  struct Class {
    PString representative;
    bool unequal = false;
  };
  std::vector<Class> classes;
  const auto n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t h = 1; i + 2 * h <= n; ++h) {
      const auto left = s.slice(i, h);
      const auto right = s.slice(i + h, h);
      if (!p_equivalent(left, right)) continue;
      const auto square = s.slice(i, 2 * h);
      const bool unequal = left != right;
      auto it = std::find_if(classes.begin(), classes.end(),
                             [&](const Class& c) { return p_equivalent(c.representative, square); });
      if (it == classes.end()) {
        classes.push_back({square, unequal});
      } else {
        it->unequal = it->unequal || unequal;
      }
    }
  }
  out.ps = classes.size();
  out.ps_prime = static_cast<std::size_t>(std::count_if(classes.begin(), classes.end(), [](const Class& c) { return c.unequal; }));

  for (std::size_t len = 2; len <= n; len += 2) {
    const auto prefix = s.slice(0, len);
    if (!p_equivalent(prefix.slice(0, len / 2), prefix.slice(len / 2, len / 2))) continue;
    bool unique = true;
    for (std::size_t i = 1; i + len <= n && unique; ++i) unique = !p_equivalent(s.slice(i, len), prefix);
    if (unique) out.unique_square_prefixes.push_back(len);
  }
  return out;
}

}  // namespace psq::oracle
