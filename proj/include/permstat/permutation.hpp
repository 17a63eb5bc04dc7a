#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/errors.hpp"

namespace permstat {

/// A permutation of {1..n} in one-line notation. Values and positions are
/// 1-based at the API boundary; the word is stored with word()[i-1] = p(i).
class Permutation {
 public:
  /// Validates that `word` is a rearrangement of 1..n (throws Errc::malformed).
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  /// Trusted constructor for callers that produce valid words by
  /// construction (encode, group actions, enumeration). No validation.
  static Permutation unchecked(std::vector<int> word);

  int size() const { return static_cast<int>(word_.size()); }

  /// p(i), 1-based.
  int operator()(int i) const { return word_[static_cast<size_t>(i) - 1]; }

  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  struct unchecked_t {};
  Permutation(std::vector<int> word, unchecked_t) : word_(std::move(word)) {}

  std::vector<int> word_;
};

/// Parses one-line text: a digit string for n <= 9 ("25413"), or
/// comma-separated values ("10,2,3,...") which is mandatory for n >= 10.
/// Throws Errc::malformed / Errc::ambiguous.
Permutation parse(std::string_view text);

/// Digit form for n <= 9, comma form otherwise; parse(format(p)) == p.
std::string format(const Permutation& p);

/// The image of p in S_{n+k}: agrees with p on 1..n, fixes n+1..n+k.
Permutation embed(const Permutation& p, int k);

enum class Special {
  identity,       // 1 2 ... n
  pi0,            // n (n-1) ... 1
  pi1,            // 2 3 ... n 1
  pi1inv,         // n 1 2 ... (n-1)
  pi2,            // n 2 3 ... (n-1) 1
  near_identity,  // 2 1 3 4 ... n
};

/// Throws Errc::size when n is too small for the family (pi2 and
/// near_identity need n >= 2, the rest n >= 1).
Permutation special(Special kind, int n);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace permstat
