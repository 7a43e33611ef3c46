#include "psq/bijection.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "psq/error.hpp"

namespace psq {

namespace {

std::string symbol_name(Symbol a) {
  return a < 26 ? std::string(1, static_cast<char>('a' + a)) : std::to_string(a);
}

void check_sigma(int sigma) {
  if (sigma < 0 || sigma > kMaxSigma) throw DomainError("sigma outside [0, 64]");
}

}  // namespace

Bijection::Bijection(std::vector<Symbol> image) : image_(std::move(image)) {
  check_sigma(sigma());
  std::uint64_t seen = 0;
  for (Symbol b : image_) {
    if (int{b} >= sigma() || (seen >> b & 1U)) throw DomainError("image is not a permutation");
    seen |= std::uint64_t{1} << b;
  }
}

Bijection Bijection::identity(int sigma) {
  check_sigma(sigma);
  std::vector<Symbol> image(static_cast<std::size_t>(sigma));
  std::iota(image.begin(), image.end(), Symbol{0});
  return Bijection(std::move(image));
}

Bijection Bijection::transposition(int sigma, Symbol a, Symbol b) {
  if (int{a} >= sigma || int{b} >= sigma || a == b) throw DomainError("invalid transposition");
  auto f = identity(sigma);
  std::swap(f.image_[a], f.image_[b]);
  return f;
}

Bijection Bijection::cycle(int sigma, std::initializer_list<Symbol> elements) {
  auto f = identity(sigma);
  std::vector<Symbol> cyc(elements);
  std::uint64_t seen = 0;
  for (Symbol a : cyc) {
    if (int{a} >= sigma || (seen >> a & 1U)) throw DomainError("invalid cycle");
    seen |= std::uint64_t{1} << a;
  }
  for (std::size_t i = 0; i < cyc.size(); ++i) f.image_[cyc[i]] = cyc[(i + 1) % cyc.size()];
  return f;
}

Bijection Bijection::inverse() const {
  Bijection out = *this;
  for (std::size_t a = 0; a < image_.size(); ++a) out.image_[image_[a]] = static_cast<Symbol>(a);
  return out;
}

Bijection Bijection::power(long long k) const {
  Bijection base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? 0ULL - static_cast<unsigned long long>(k) : static_cast<unsigned long long>(k);
  Bijection result = identity(sigma());
  while (e) {
    if (e & 1U) result = compose(result, base);
    base = compose(base, base);
    e >>= 1U;
  }
  return result;
}

PString Bijection::apply(const PString& s) const {
  if (s.sigma() > sigma()) throw DomainError("bijection does not cover the string's alphabet");
  std::vector<Symbol> out(s.symbols().begin(), s.symbols().end());
  for (auto& c : out) c = image_[c];
  return PString(std::move(out), s.sigma());
}

bool Bijection::is_identity() const noexcept {
  for (std::size_t a = 0; a < image_.size(); ++a) {
    if (image_[a] != a) return false;
  }
  return true;
}

Bijection compose(const Bijection& f, const Bijection& g) {
  if (f.sigma() != g.sigma()) {
    throw DomainError("cannot compose bijections on alphabets of size " + std::to_string(f.sigma()) +
                      " and " + std::to_string(g.sigma()));
  }
  std::vector<Symbol> image(g.image().size());
  for (std::size_t a = 0; a < image.size(); ++a) image[a] = f(g(static_cast<Symbol>(a)));
  return Bijection(std::move(image));
}

Parity permutation_parity(const Bijection& f) {
  std::uint64_t visited = 0;
  int transpositions = 0;
  for (int start = 0; start < f.sigma(); ++start) {
    if (visited >> start & 1U) continue;
    int length = 0;
    for (int a = start; !(visited >> a & 1U); a = f(static_cast<Symbol>(a))) {
      visited |= std::uint64_t{1} << a;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

std::vector<Bijection> all_permutations(int sigma) {
  std::vector<Bijection> out;
  auto image = Bijection::identity(sigma).image();
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

std::string format_cycles(const Bijection& f) {
  std::string out;
  std::uint64_t visited = 0;
  for (int start = 0; start < f.sigma(); ++start) {
    if ((visited >> start & 1U) || f(static_cast<Symbol>(start)) == start) continue;
    out += "(";
    for (int a = start; !(visited >> a & 1U); a = f(static_cast<Symbol>(a))) {
      visited |= std::uint64_t{1} << a;
      if (a != start) out += " ";
      out += symbol_name(static_cast<Symbol>(a));
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

bool PartialBijection::bind(Symbol a, Symbol b) noexcept {
  if (forward_[a] != kUnbound || backward_[b] != kUnbound) {
    return forward_[a] == b;
  }
  forward_[a] = b;
  backward_[b] = a;
  domain_ |= std::uint64_t{1} << a;
  range_ |= std::uint64_t{1} << b;
  return true;
}

std::vector<std::pair<Symbol, Symbol>> PartialBijection::pairs() const {
  std::vector<std::pair<Symbol, Symbol>> out;
  for (int a = 0; a < kMaxSigma; ++a) {
    if (forward_[a] != kUnbound) out.emplace_back(static_cast<Symbol>(a), forward_[a]);
  }
  return out;
}

bool PartialBijection::extended_by(const Bijection& f) const noexcept {
  for (int a = 0; a < kMaxSigma; ++a) {
    if (forward_[a] == kUnbound) continue;
    if (a >= f.sigma() || f(static_cast<Symbol>(a)) != forward_[a]) return false;
  }
  return true;
}

std::uint64_t PartialBijection::extension_count(int sigma) const {
  const auto bound = static_cast<int>(size());
  if (sigma < bound) return 0;
  std::uint64_t count = 1;
  for (int k = 2; k <= sigma - bound; ++k) {
    if (count > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(k)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= static_cast<std::uint64_t>(k);
  }
  return count;
}

bool PartialBijection::for_each_completion(int sigma, const std::function<bool(const Bijection&)>& visit) const {
  check_sigma(sigma);
  const std::uint64_t full = sigma == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << sigma) - 1;
  if ((domain_ & ~full) || (range_ & ~full)) throw DomainError("partial map exceeds sigma");

  std::vector<Symbol> free_keys;
  std::vector<Symbol> free_values;
  for (int a = 0; a < sigma; ++a) {
    if (!(domain_ >> a & 1U)) free_keys.push_back(static_cast<Symbol>(a));
    if (!(range_ >> a & 1U)) free_values.push_back(static_cast<Symbol>(a));
  }
  std::vector<Symbol> image(static_cast<std::size_t>(sigma));
  for (int a = 0; a < sigma; ++a) image[static_cast<std::size_t>(a)] = forward_[a];
  do {
    for (std::size_t i = 0; i < free_keys.size(); ++i) image[free_keys[i]] = free_values[i];
    if (!visit(Bijection(image))) return false;
  } while (std::next_permutation(free_values.begin(), free_values.end()));
  return true;
}

std::string format_partial(const PartialBijection& m) {
  std::string out = "{";
  bool first = true;
  for (auto [a, b] : m.pairs()) {
    if (!first) out += ", ";
    first = false;
    out += symbol_name(a) + "->" + symbol_name(b);
  }
  return out + "}";
}

}  // namespace psq
