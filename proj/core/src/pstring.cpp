#include "psq/pstring.hpp"

#include <algorithm>
#include <charconv>

#include "psq/error.hpp"

namespace psq {

namespace {

int minimal_sigma(SymbolSpan symbols) {
  if (symbols.empty()) return 0;
  return int{*std::max_element(symbols.begin(), symbols.end())} + 1;
}

int parse_positive(std::string_view token, std::string_view what) {
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last || value < 0) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

PString::PString(std::vector<Symbol> symbols, int sigma) : symbols_(std::move(symbols)), sigma_(sigma) {
  if (sigma_ < 0 || sigma_ > kMaxSigma) {
    throw DomainError("sigma " + std::to_string(sigma_) + " outside [0, 64]");
  }
  for (Symbol c : symbols_) {
    if (int{c} >= sigma_) {
      throw DomainError("symbol id " + std::to_string(c) + " not below sigma " + std::to_string(sigma_));
    }
  }
}

PString PString::minimal(std::vector<Symbol> symbols) {
  const int sigma = minimal_sigma(symbols);
  return PString(std::move(symbols), sigma);
}

PString PString::slice(std::size_t offset, std::size_t count) const {
  if (offset > size() || count > size() - offset) {
    throw DomainError("slice out of range");
  }
  PString out;
  out.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(offset),
                      symbols_.begin() + static_cast<std::ptrdiff_t>(offset + count));
  out.sigma_ = sigma_;
  return out;
}

PString PString::substring(std::size_t first, std::size_t last) const {
  if (first > last) return PString({}, sigma_);
  if (first < 1 || last > size()) {
    throw DomainError("substring [" + std::to_string(first) + ".." + std::to_string(last) +
                      "] outside string of length " + std::to_string(size()));
  }
  return slice(first - 1, last - first + 1);
}

PString PString::with_sigma(int new_sigma) const { return PString(symbols_, new_sigma); }

std::strong_ordering operator<=>(const PString& a, const PString& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(a.symbols_.begin(), a.symbols_.end(),
                                                      b.symbols_.begin(), b.symbols_.end());
      c != 0) {
    return c;
  }
  return a.sigma_ <=> b.sigma_;
}

PString concat(const PString& a, const PString& b) {
  std::vector<Symbol> out(a.symbols().begin(), a.symbols().end());
  out.insert(out.end(), b.symbols().begin(), b.symbols().end());
  return PString(std::move(out), std::max(a.sigma(), b.sigma()));
}

PString parse_pstring(std::string_view text, std::optional<int> sigma_override) {
  std::optional<int> declared;
  if (auto at = text.find('@'); at != std::string_view::npos) {
    declared = parse_positive(text.substr(at + 1), "sigma suffix");
    text = text.substr(0, at);
  }

  std::vector<Symbol> symbols;
  const bool numeric = text.find_first_of("0123456789,") != std::string_view::npos;
  if (numeric) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto comma = std::min(text.find(',', pos), text.size());
      const int id = parse_positive(text.substr(pos, comma - pos), "symbol id");
      if (id >= kMaxSigma) throw DomainError("symbol id " + std::to_string(id) + " exceeds 63");
      symbols.push_back(static_cast<Symbol>(id));
      pos = comma + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < 'a' || ch > 'z') {
        throw ParseError(std::string("unexpected character '") + ch + "' (expected a-z)");
      }
      symbols.push_back(static_cast<Symbol>(ch - 'a'));
    }
  }

  const int needed = minimal_sigma(symbols);
  int sigma = needed;
  if (sigma_override) {
    sigma = *sigma_override;
  } else if (declared) {
    sigma = *declared;
  }
  if (sigma < needed || sigma < 0) {
    throw DomainError("sigma " + std::to_string(sigma) + " does not cover symbol id " +
                      std::to_string(needed - 1));
  }
  return PString(std::move(symbols), sigma);
}

std::string format_symbols(SymbolSpan symbols, int sigma) {
  std::string out;
  if (sigma <= 26) {
    for (Symbol c : symbols) out.push_back(static_cast<char>('a' + c));
    return out;
  }
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(symbols[i]);
  }
  return out;
}

std::string format_pstring(const PString& s) {
  std::string out = format_symbols(s.symbols(), s.sigma());
  if (s.sigma() != minimal_sigma(s.symbols())) out += "@" + std::to_string(s.sigma());
  return out;
}

}  // namespace psq
