#include "permstat/fisher_yates.hpp"

#include <numeric>
#include <string>
#include <utility>

namespace permstat {

SubexcedantSeq::SubexcedantSeq(std::vector<int> seq) : j(std::move(seq)) {
  for (int i = 1; i <= size(); ++i) {
    int ji = j[static_cast<size_t>(i) - 1];
    if (ji < 1 || ji > i)
      throw Error(Errc::range, "j_" + std::to_string(i) + " = " +
                                   std::to_string(ji) + " outside [1, " +
                                   std::to_string(i) + "]");
  }
}

SubexcedantSeq SubexcedantSeq::unchecked(std::vector<int> seq) {
  return SubexcedantSeq(std::move(seq), unchecked_t{});
}

DistanceSeq distances(const SubexcedantSeq& seq) {
  DistanceSeq out;
  out.d.resize(seq.j.size());
  for (int i = 1; i <= seq.size(); ++i)
    out.d[static_cast<size_t>(i) - 1] = i - seq.j[static_cast<size_t>(i) - 1];
  return out;
}

Permutation encode(const SubexcedantSeq& seq) {
  const int n = seq.size();
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  for (int i = n; i >= 1; --i)
    std::swap(w[static_cast<size_t>(seq.j[static_cast<size_t>(i) - 1]) - 1],
              w[static_cast<size_t>(i) - 1]);
  return Permutation::unchecked(std::move(w));
}

std::pair<SubexcedantSeq, SubexcedantSeq> decode_pair(const Permutation& p) {
  const int n = p.size();
  std::vector<int> w = p.word();
  std::vector<int> u(static_cast<size_t>(n));  // u[s-1] = position of symbol s
  for (int i = 1; i <= n; ++i) u[static_cast<size_t>(w[static_cast<size_t>(i) - 1]) - 1] = i;

  std::vector<int> jp(static_cast<size_t>(n)), ji(static_cast<size_t>(n));
  for (int i = n; i >= 1; --i) {
    const int a = w[static_cast<size_t>(i) - 1];  // j_i of p
    const int b = u[static_cast<size_t>(i) - 1];  // j_i of p^{-1}
    jp[static_cast<size_t>(i) - 1] = a;
    ji[static_cast<size_t>(i) - 1] = b;
    // Exchange symbols a and i in w; symbol a sits at position i, symbol i
    // at position b. Mirrored as a position swap in u.
    w[static_cast<size_t>(i) - 1] = i;
    w[static_cast<size_t>(b) - 1] = a;
    u[static_cast<size_t>(i) - 1] = i;
    u[static_cast<size_t>(a) - 1] = b;
  }
  return {SubexcedantSeq::unchecked(std::move(jp)),
          SubexcedantSeq::unchecked(std::move(ji))};
}

SubexcedantSeq decode(const Permutation& p) {
  // Single code path: the paired decode is the linear-time one.
  return decode_pair(p).first;
}

namespace {

std::int64_t stat_of_seq(const SubexcedantSeq& seq) {
  std::int64_t total = 0;
  for (int i = 1; i <= seq.size(); ++i)
    total += i - seq.j[static_cast<size_t>(i) - 1];
  return total;
}

std::int64_t ska_of_seq(const SubexcedantSeq& seq) {
  std::int64_t count = 0;
  for (int i = 1; i <= seq.size(); ++i)
    if (i - seq.j[static_cast<size_t>(i) - 1] > count) ++count;
  return count;
}

}  // namespace

std::int64_t stat(const Permutation& p) { return stat_of_seq(decode(p)); }

std::int64_t stati(const Permutation& p) {
  return stat_of_seq(decode_pair(p).second);
}

std::int64_t ska(const Permutation& p) { return ska_of_seq(decode(p)); }

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw Error(Errc::range, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num * o.den - o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}

StatMoments stat_moments(int n) {
  if (n < 1) throw Error(Errc::size, "n must be >= 1");
  const std::int64_t nn = n;
  // sum of i^2 for i = 1..n, minus n, over 12
  const std::int64_t sum_sq = nn * (nn + 1) * (2 * nn + 1) / 6;
  return StatMoments{Rational(nn * (nn - 1), 4), Rational(sum_sq - nn, 12)};
}

std::uint64_t Sampler::draw(std::uint64_t bound) {
  // Rejection below 2^64 mod bound keeps the draw exactly uniform.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = rng_();
    if (r >= threshold) return r % bound;
  }
}

SubexcedantSeq Sampler::next_seq(int n) {
  if (n < 1) throw Error(Errc::size, "n must be >= 1");
  std::vector<int> j(static_cast<size_t>(n));
  j[0] = 1;
  for (int i = n; i >= 2; --i)
    j[static_cast<size_t>(i) - 1] =
        static_cast<int>(draw(static_cast<std::uint64_t>(i))) + 1;
  return SubexcedantSeq::unchecked(std::move(j));
}

Permutation Sampler::next(int n) { return encode(next_seq(n)); }

Permutation sample(int n, std::uint64_t seed) {
  Sampler s(seed);
  return s.next(n);
}

}  // namespace permstat
