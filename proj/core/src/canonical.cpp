#include "psq/canonical.hpp"

#include <algorithm>
#include <array>

#include "psq/error.hpp"

namespace psq {

bool is_canonical(SymbolSpan symbols) noexcept {
  int next = 0;
  for (Symbol c : symbols) {
    if (c > next) return false;
    if (c == next) ++next;
  }
  return true;
}

PString canonicalize(const PString& s) {
  std::array<int, kMaxSigma> rename;
  rename.fill(-1);
  int next = 0;
  std::vector<Symbol> out;
  out.reserve(s.size());
  for (Symbol c : s.symbols()) {
    if (rename[c] < 0) rename[c] = next++;
    out.push_back(static_cast<Symbol>(rename[c]));
  }
  return PString(std::move(out), next);
}

namespace {

void extend(std::vector<Symbol>& buf, std::size_t pos, int used, int max_sigma,
            const std::function<void(const PString&)>& visit) {
  if (pos == buf.size()) {
    visit(PString(buf, used));
    return;
  }
  const int limit = std::min(used + 1, max_sigma);
  for (int c = 0; c < limit; ++c) {
    buf[pos] = static_cast<Symbol>(c);
    extend(buf, pos + 1, c == used ? used + 1 : used, max_sigma, visit);
  }
}

}  // namespace

void for_each_canonical(std::size_t length, int max_sigma, const std::function<void(const PString&)>& visit) {
  if (max_sigma < 0 || max_sigma > kMaxSigma) throw DomainError("max_sigma outside [0, 64]");
  if (length == 0) {
    visit(PString());
    return;
  }
  if (max_sigma == 0) return;
  std::vector<Symbol> buf(length);
  extend(buf, 0, 0, max_sigma, visit);
}

std::vector<PString> canonical_strings(std::size_t max_length, int max_sigma) {
  std::vector<PString> out;
  for (std::size_t n = 1; n <= max_length; ++n) {
    for_each_canonical(n, max_sigma, [&](const PString& s) { out.push_back(s); });
  }
  return out;
}

std::vector<PString> all_strings(std::size_t length, int sigma) {
  if (sigma < 0 || sigma > kMaxSigma) throw DomainError("sigma outside [0, 64]");
  std::vector<PString> out;
  std::vector<Symbol> buf(length, 0);
  if (length == 0) return {PString({}, sigma)};
  if (sigma == 0) return out;
  while (true) {
    out.emplace_back(buf, sigma);
    std::size_t i = length;
    while (i > 0 && buf[i - 1] + 1 == sigma) buf[--i] = 0;
    if (i == 0) break;
    ++buf[i - 1];
  }
  return out;
}

}  // namespace psq
