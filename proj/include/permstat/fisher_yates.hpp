#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

/// The shuffle coordinates of a permutation: the positions j_1..j_n chosen
/// by the swap process that builds p from the identity, with 1 <= j_i <= i.
/// These sequences are in bijection with S_n.
struct SubexcedantSeq {
  std::vector<int> j;  // j[i-1] = j_i

  /// Validates 1 <= j_i <= i (throws Errc::range).
  explicit SubexcedantSeq(std::vector<int> seq);

  static SubexcedantSeq unchecked(std::vector<int> seq);

  int size() const { return static_cast<int>(j.size()); }

  bool operator==(const SubexcedantSeq&) const = default;

 private:
  struct unchecked_t {};
  SubexcedantSeq(std::vector<int> seq, unchecked_t) : j(std::move(seq)) {}
};

/// Rightward displacements d_i = i - j_i, 0 <= d_i <= i-1.
struct DistanceSeq {
  std::vector<int> d;
  bool operator==(const DistanceSeq&) const = default;
};

DistanceSeq distances(const SubexcedantSeq& seq);

/// Runs the swap process: starting from the identity, for i = n down to 1
/// swap the entries at positions j_i and i.
Permutation encode(const SubexcedantSeq& seq);

/// Inverts the swap process: for i = n down to 1, read j_i from position i
/// and exchange the symbols j_i and i. encode(decode(p)) == p.
SubexcedantSeq decode(const Permutation& p);

/// Decodes p and p^{-1} in one linear pass, keeping the word and its
/// inverse side by side so each symbol exchange is O(1).
std::pair<SubexcedantSeq, SubexcedantSeq> decode_pair(const Permutation& p);

/// Total rightward distance moved by the swap process: sum of i - j_i.
std::int64_t stat(const Permutation& p);

/// stat of the inverse.
std::int64_t stati(const Permutation& p);

/// Eulerian partner of stat: scanning d_1..d_n, counts the steps where d_i
/// exceeds the count accumulated so far (the counter starts at 0, so d_1 = 0
/// never contributes).
std::int64_t ska(const Permutation& p);

/// Exact rational with 64-bit normalized numerator/denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  bool operator==(const Rational&) const = default;
};

struct StatMoments {
  Rational mean;      // n(n-1)/4
  Rational variance;  // sum over i of (i^2 - 1)/12
};

/// Exact mean and variance of stat over S_n: stat is the sum of independent
/// uniforms on [0..i-1].
StatMoments stat_moments(int n);

/// Deterministic stream of uniform permutations. The generator is a fixed
/// artifact constant: std::mt19937_64 seeded once, with unbiased
/// modulo-rejection for each bounded draw; j_i is drawn for i = n down to 2
/// (j_1 is forced). Identical seeds give identical streams on any platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Permutation next(int n);
  SubexcedantSeq next_seq(int n);

 private:
  std::uint64_t draw(std::uint64_t bound);  // uniform in [0, bound)

  std::mt19937_64 rng_;
};

/// One uniform draw from S_n; equals Sampler(seed).next(n).
Permutation sample(int n, std::uint64_t seed);

}  // namespace permstat
