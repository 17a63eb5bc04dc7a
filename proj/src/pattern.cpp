#include "permstat/pattern.hpp"

#include <algorithm>

namespace permstat {

VincularPattern VincularPattern::parse(std::string_view text) {
  VincularPattern pat;
  pat.text_ = std::string(text);
  bool dash_pending = false;
  for (char c : text) {
    if (c == '-') {
      if (pat.ranks_.empty() || dash_pending)
        throw Error(Errc::malformed, "misplaced dash in pattern");
      dash_pending = true;
      continue;
    }
    if (c < 'a' || c > 'd')
      throw Error(Errc::malformed, "pattern letters must be a..d");
    int rank = c - 'a' + 1;
    if (std::find(pat.ranks_.begin(), pat.ranks_.end(), rank) !=
        pat.ranks_.end())
      throw Error(Errc::malformed, "repeated pattern letter");
    if (!pat.ranks_.empty()) pat.adjacent_.push_back(!dash_pending);
    pat.ranks_.push_back(rank);
    dash_pending = false;
  }
  if (dash_pending) throw Error(Errc::malformed, "trailing dash in pattern");
  if (pat.ranks_.empty()) throw Error(Errc::malformed, "empty pattern");
  if (pat.ranks_.size() > 4)
    throw Error(Errc::malformed, "patterns longer than 4 are not supported");
  return pat;
}

namespace {

bool order_isomorphic(const Permutation& p, const std::vector<int>& positions,
                      const std::vector<int>& ranks) {
  const int k = static_cast<int>(ranks.size());
  for (int x = 0; x < k; ++x)
    for (int y = x + 1; y < k; ++y)
      if ((p(positions[static_cast<size_t>(x)]) <
           p(positions[static_cast<size_t>(y)])) !=
          (ranks[static_cast<size_t>(x)] < ranks[static_cast<size_t>(y)]))
        return false;
  return true;
}

std::int64_t count_from(const Permutation& p, const VincularPattern& pat,
                        std::vector<int>& positions) {
  const int k = pat.length();
  const int m = static_cast<int>(positions.size());
  if (m == k)
    return order_isomorphic(p, positions, pat.ranks()) ? 1 : 0;

  const int n = p.size();
  std::int64_t total = 0;
  if (m > 0 && pat.adjacent()[static_cast<size_t>(m) - 1]) {
    int next = positions.back() + 1;
    if (next + (k - m - 1) <= n) {
      positions.push_back(next);
      total += count_from(p, pat, positions);
      positions.pop_back();
    }
  } else {
    int lo = m == 0 ? 1 : positions.back() + 1;
    for (int i = lo; i + (k - m - 1) <= n; ++i) {
      positions.push_back(i);
      total += count_from(p, pat, positions);
      positions.pop_back();
    }
  }
  return total;
}

}  // namespace

std::int64_t count_vincular(const Permutation& p, const VincularPattern& pat) {
  if (pat.length() > p.size()) return 0;
  std::vector<int> positions;
  positions.reserve(static_cast<size_t>(pat.length()));
  return count_from(p, pat, positions);
}

std::int64_t count_vincular(const Permutation& p, std::string_view pattern) {
  return count_vincular(p, VincularPattern::parse(pattern));
}

}  // namespace permstat
