#include "permstat/distribution.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>

namespace permstat {

namespace {

constexpr int kHardCap = 20;  // 20! is the last factorial below 2^63

int initial_ceiling() {
  if (const char* env = std::getenv("PERMSTAT_MAX_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= kHardCap) return static_cast<int>(v);
  }
  return 10;
}

std::atomic<int>& ceiling_slot() {
  static std::atomic<int> value{initial_ceiling()};
  return value;
}

}  // namespace

int enumeration_ceiling() { return ceiling_slot().load(); }

void set_enumeration_ceiling(int n) {
  if (n < 1 || n > kHardCap)
    throw Error(Errc::too_large, "ceiling must be in [1, 20]");
  ceiling_slot().store(n);
}

void detail::check_enumerable(int n) {
  if (n < 1) throw Error(Errc::size, "n must be >= 1");
  if (n > enumeration_ceiling())
    throw Error(Errc::too_large,
                "n = " + std::to_string(n) + " exceeds the ceiling " +
                    std::to_string(enumeration_ceiling()));
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t rank_of(const Permutation& p) {
  const int n = p.size();
  std::uint64_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    std::uint64_t smaller_right = 0;
    for (int k = i + 1; k <= n; ++k)
      if (p(k) < p(i)) ++smaller_right;
    rank += smaller_right * factorial(n - i);
  }
  return rank;
}

Permutation unrank(int n, std::uint64_t rank) {
  std::vector<int> avail(static_cast<size_t>(n));
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<int> w;
  w.reserve(static_cast<size_t>(n));
  for (int i = n; i >= 1; --i) {
    const std::uint64_t f = factorial(i - 1);
    const size_t digit = static_cast<size_t>(rank / f);
    rank %= f;
    w.push_back(avail[digit]);
    avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation::unchecked(std::move(w));
}

std::uint64_t DistPolynomial::total() const {
  return std::accumulate(coeffs.begin(), coeffs.end(), std::uint64_t{0});
}

namespace {

void trim(std::vector<std::uint64_t>& coeffs) {
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
}

}  // namespace

DistPolynomial qfactorial(int n) {
  if (n < 0) throw Error(Errc::size, "n must be >= 0");
  std::vector<std::uint64_t> c{1};
  for (int i = 2; i <= n; ++i) {
    std::vector<std::uint64_t> next(c.size() + static_cast<size_t>(i) - 1, 0);
    for (size_t a = 0; a < c.size(); ++a)
      for (int b = 0; b < i; ++b) next[a + static_cast<size_t>(b)] += c[a];
    c = std::move(next);
  }
  return DistPolynomial{n, std::move(c)};
}

DistPolynomial distribution(const Registry& reg, std::string_view stat_name,
                            int n, int threads) {
  const auto& desc = reg.at(stat_name);
  using Tally = std::vector<std::uint64_t>;
  Tally zero(static_cast<size_t>(n) * (static_cast<size_t>(n) - 1) / 2 + 2, 0);
  Tally counts = enumerate<Tally>(
      n, zero,
      [&](Tally& acc, const Permutation& p) {
        const auto v = static_cast<size_t>(desc.eval(p));
        if (v >= acc.size()) acc.resize(v + 1, 0);
        ++acc[v];
      },
      [](Tally& acc, const Tally& other) {
        if (other.size() > acc.size()) acc.resize(other.size(), 0);
        for (size_t i = 0; i < other.size(); ++i) acc[i] += other[i];
      },
      threads);
  trim(counts);
  return DistPolynomial{n, std::move(counts)};
}

bool is_mahonian(const Registry& reg, std::string_view stat_name, int n,
                 int threads) {
  return distribution(reg, stat_name, n, threads) == qfactorial(n);
}

bool is_eulerian(const Registry& reg, std::string_view stat_name, int n,
                 int threads) {
  return distribution(reg, stat_name, n, threads).coeffs ==
         distribution(reg, "des", n, threads).coeffs;
}

std::vector<std::uint64_t> JointDist::row_sums() const {
  std::vector<std::uint64_t> out;
  out.reserve(rows.size());
  for (const auto& r : rows)
    out.push_back(std::accumulate(r.begin(), r.end(), std::uint64_t{0}));
  return out;
}

std::vector<std::uint64_t> JointDist::col_sums() const {
  std::vector<std::uint64_t> out(rows.empty() ? 0 : rows.front().size(), 0);
  for (const auto& r : rows)
    for (size_t c = 0; c < r.size(); ++c) out[c] += r[c];
  return out;
}

JointDist joint(const Registry& reg, std::string_view eulerian_name,
                std::string_view mahonian_name, int n, int threads) {
  const auto& e = reg.at(eulerian_name);
  const auto& m = reg.at(mahonian_name);
  const size_t cols = static_cast<size_t>(n) * (static_cast<size_t>(n) - 1) / 2 + 1;
  using Matrix = std::vector<std::vector<std::uint64_t>>;
  Matrix zero(static_cast<size_t>(n), std::vector<std::uint64_t>(cols, 0));
  Matrix rows = enumerate<Matrix>(
      n, zero,
      [&](Matrix& acc, const Permutation& p) {
        ++acc[static_cast<size_t>(e.eval(p))][static_cast<size_t>(m.eval(p))];
      },
      [](Matrix& acc, const Matrix& other) {
        for (size_t r = 0; r < acc.size(); ++r)
          for (size_t c = 0; c < acc[r].size(); ++c) acc[r][c] += other[r][c];
      },
      threads);
  return JointDist{n, std::move(rows)};
}

bool equidistributed(const Registry& reg, const StatPair& a, const StatPair& b,
                     int n, int threads) {
  if (a == b) {
    reg.at(a.first);
    reg.at(a.second);
    detail::check_enumerable(n);
    return true;
  }
  return joint(reg, a.first, a.second, n, threads) ==
         joint(reg, b.first, b.second, n, threads);
}

std::vector<std::vector<std::string>> partition_classes(
    const Registry& reg, std::span<const std::string> stat_names,
    std::string_view eulerian_name, int n, int threads) {
  std::vector<std::vector<std::string>> classes;
  std::vector<JointDist> reps;
  for (const auto& name : stat_names) {
    JointDist j = joint(reg, eulerian_name, name, n, threads);
    bool placed = false;
    for (size_t c = 0; c < reps.size(); ++c) {
      if (reps[c] == j) {
        classes[c].push_back(name);
        placed = true;
        break;
      }
    }
    if (!placed) {
      reps.push_back(std::move(j));
      classes.push_back({name});
    }
  }
  return classes;
}

std::vector<std::pair<std::string, GroupElement>> equiv_search(
    const Registry& reg, std::string_view target_name,
    std::span<const std::string> candidate_names, int n_max) {
  detail::check_enumerable(std::max(n_max, 1));
  const auto& target = reg.at(target_name);

  std::vector<std::pair<std::string, GroupElement>> survivors;
  for (const auto& cand_name : candidate_names) {
    const auto& cand = reg.at(cand_name);
    for (const GroupElement& g : GroupElement::all()) {
      bool alive = true;
      // Cumulative over every n: agreement at one size can break at another.
      for (int n = 2; n <= n_max && alive; ++n) {
        std::vector<int> w(static_cast<size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        do {
          Permutation p = Permutation::unchecked(std::vector<int>(w));
          if (cand.eval(g.apply(p)) != target.eval(p)) {
            alive = false;
            break;
          }
        } while (std::next_permutation(w.begin(), w.end()));
      }
      if (alive) survivors.emplace_back(cand_name, g);
    }
  }
  return survivors;
}

}  // namespace permstat
