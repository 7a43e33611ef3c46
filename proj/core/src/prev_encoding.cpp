#include "psq/prev_encoding.hpp"

#include <array>

#include "psq/error.hpp"

namespace psq {

PrevEncoding prev_encode(SymbolSpan symbols) {
  PrevEncoding out;
  out.offsets.resize(symbols.size());
  std::array<std::size_t, kMaxSigma> last{};  // 1-based position of last occurrence, 0 = none
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const auto c = symbols[i];
    out.offsets[i] = last[c] == 0 ? 0 : static_cast<std::uint32_t>(i + 1 - last[c]);
    last[c] = i + 1;
  }
  return out;
}

PrevEncoding prev_encode_window(const PrevEncoding& whole, std::size_t offset, std::size_t count) {
  if (offset > whole.size() || count > whole.size() - offset) {
    throw DomainError("encoding window out of range");
  }
  PrevEncoding out;
  out.offsets.resize(count);
  for (std::size_t t = 0; t < count; ++t) {
    const auto d = whole.offsets[offset + t];
    out.offsets[t] = d <= t ? d : 0;
  }
  return out;
}

std::string format_encoding(const PrevEncoding& e) {
  std::string out;
  for (std::size_t i = 0; i < e.offsets.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(e.offsets[i]);
  }
  return out;
}

}  // namespace psq
