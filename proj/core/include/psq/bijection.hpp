#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psq/pstring.hpp"

namespace psq {

enum class Parity { even, odd };

inline Parity operator^(Parity a, Parity b) noexcept { return a == b ? Parity::even : Parity::odd; }

/// A permutation of {0, ..., sigma-1}; image()[a] is where a goes.
class Bijection {
 public:
  Bijection() = default;

  /// Throws DomainError unless `image` is a permutation of {0..size-1}.
  explicit Bijection(std::vector<Symbol> image);

  static Bijection identity(int sigma);
  static Bijection transposition(int sigma, Symbol a, Symbol b);
  /// The cycle a0 -> a1 -> ... -> a0; every other symbol is fixed.
  static Bijection cycle(int sigma, std::initializer_list<Symbol> elements);

  int sigma() const noexcept { return static_cast<int>(image_.size()); }
  const std::vector<Symbol>& image() const noexcept { return image_; }
  Symbol operator()(Symbol a) const noexcept { return image_[a]; }

  Bijection inverse() const;
  /// f^k for any integer k (negative powers use the inverse).
  Bijection power(long long k) const;

  /// f(s) position-wise. Throws DomainError if s.sigma() > sigma().
  PString apply(const PString& s) const;

  bool is_identity() const noexcept;

  friend bool operator==(const Bijection&, const Bijection&) = default;
  friend auto operator<=>(const Bijection&, const Bijection&) = default;

 private:
  std::vector<Symbol> image_;
};

/// (f . g)(a) = f(g(a)). Throws DomainError on mismatched sigma.
Bijection compose(const Bijection& f, const Bijection& g);

/// Parity through the cycle decomposition: sum of (cycle length - 1), mod 2.
Parity permutation_parity(const Bijection& f);

/// All sigma! permutations in lexicographic order of their images.
std::vector<Bijection> all_permutations(int sigma);

/// Cycle notation with letters, e.g. "(a b c)"; the identity prints as "()".
std::string format_cycles(const Bijection& f);

/// An injective partial map between symbols, e.g. the map forced on the
/// alphabet of x by x ~ y before it is completed to a full permutation.
class PartialBijection {
 public:
  PartialBijection() { forward_.fill(kUnbound); backward_.fill(kUnbound); }

  /// Adds a -> b. Returns false (leaving the map unchanged) if a is already
  /// bound elsewhere or b is already the image of another symbol.
  bool bind(Symbol a, Symbol b) noexcept;

  std::optional<Symbol> at(Symbol a) const noexcept {
    return forward_[a] == kUnbound ? std::nullopt : std::optional<Symbol>(forward_[a]);
  }
  std::optional<Symbol> preimage(Symbol b) const noexcept {
    return backward_[b] == kUnbound ? std::nullopt : std::optional<Symbol>(backward_[b]);
  }

  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(domain_)); }
  bool empty() const noexcept { return domain_ == 0; }
  std::uint64_t domain() const noexcept { return domain_; }
  std::uint64_t range() const noexcept { return range_; }

  /// Pairs in increasing key order.
  std::vector<std::pair<Symbol, Symbol>> pairs() const;

  /// True iff f agrees with every bound pair.
  bool extended_by(const Bijection& f) const noexcept;

  /// Number of permutations of {0..sigma-1} extending this map:
  /// (sigma - size())!, saturating at UINT64_MAX.
  std::uint64_t extension_count(int sigma) const;

  /// Calls visit(f) for every completion to a permutation of {0..sigma-1}
  /// until it returns false. Completions come in lexicographic order.
  /// Returns false iff a visit stopped the enumeration.
  bool for_each_completion(int sigma, const std::function<bool(const Bijection&)>& visit) const;

  friend bool operator==(const PartialBijection& a, const PartialBijection& b) noexcept {
    return a.forward_ == b.forward_;
  }

 private:
  static constexpr Symbol kUnbound = 0xff;
  std::array<Symbol, kMaxSigma> forward_;
  std::array<Symbol, kMaxSigma> backward_;
  std::uint64_t domain_ = 0;
  std::uint64_t range_ = 0;
};

/// "{a->b, b->c}" using letters for ids below 26.
std::string format_partial(const PartialBijection& m);

}  // namespace psq
