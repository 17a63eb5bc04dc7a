#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

/// A vincular pattern over the letters a < b < c < d, length <= 4.
/// Consecutive pattern letters must match adjacent word positions unless a
/// dash separates them: "cb-a" requires the c,b positions to be adjacent
/// while the a position may sit anywhere further right.
class VincularPattern {
 public:
  static VincularPattern parse(std::string_view text);

  int length() const { return static_cast<int>(ranks_.size()); }

  /// Relative ranks of the pattern letters (1 = smallest).
  const std::vector<int>& ranks() const { return ranks_; }

  /// adjacent()[m] == true: pattern positions m+1, m+2 must be adjacent.
  const std::vector<bool>& adjacent() const { return adjacent_; }

  const std::string& text() const { return text_; }

 private:
  std::vector<int> ranks_;
  std::vector<bool> adjacent_;
  std::string text_;
};

/// Number of occurrences: index tuples i_1 < ... < i_k, order-isomorphic to
/// the pattern ranks, with i_{m+1} = i_m + 1 wherever no dash was written.
std::int64_t count_vincular(const Permutation& p, const VincularPattern& pat);

std::int64_t count_vincular(const Permutation& p, std::string_view pattern);

}  // namespace permstat
