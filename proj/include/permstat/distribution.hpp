#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "permstat/group.hpp"
#include "permstat/permutation.hpp"
#include "permstat/registry.hpp"

namespace permstat {

/// Largest n the exhaustive operations accept. Defaults to 10; the
/// PERMSTAT_MAX_N environment variable (read at startup) or
/// set_enumeration_ceiling override it, capped at 20 so counts stay exact
/// in 64 bits.
int enumeration_ceiling();
void set_enumeration_ceiling(int n);

std::uint64_t factorial(int n);

/// Lexicographic rank (0-based) and its inverse.
std::uint64_t rank_of(const Permutation& p);
Permutation unrank(int n, std::uint64_t rank);

namespace detail {
void check_enumerable(int n);
}

/// Visits every permutation of S_n exactly once, folding with an
/// associative, commutative reducer; the result is identical for any chunk
/// count. visit(acc, p) ingests one permutation; merge(acc, other) combines
/// two partial accumulators (applied in ascending chunk order).
template <typename Acc, typename Visit, typename Merge>
Acc enumerate(int n, Acc init, Visit&& visit, Merge&& merge, int threads = 1) {
  detail::check_enumerable(n);
  const std::uint64_t total = factorial(n);

  auto run_chunk = [&](std::uint64_t from, std::uint64_t count, Acc& acc) {
    Permutation p = unrank(n, from);
    std::vector<int> w = p.word();
    for (std::uint64_t k = 0; k < count; ++k) {
      visit(acc, Permutation::unchecked(std::vector<int>(w)));
      std::next_permutation(w.begin(), w.end());
    }
  };

  if (threads <= 1 || total < 2) {
    Acc acc = init;
    run_chunk(0, total, acc);
    return acc;
  }

  const std::uint64_t chunks =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total);
  std::vector<Acc> parts(static_cast<size_t>(chunks), init);
  std::vector<std::thread> workers;
  workers.reserve(static_cast<size_t>(chunks));
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t from = total / chunks * c + std::min(c, total % chunks);
    const std::uint64_t to =
        total / chunks * (c + 1) + std::min(c + 1, total % chunks);
    workers.emplace_back([&, c, from, to] {
      run_chunk(from, to - from, parts[static_cast<size_t>(c)]);
    });
  }
  for (auto& t : workers) t.join();

  Acc acc = std::move(parts.front());
  for (size_t c = 1; c < parts.size(); ++c) merge(acc, parts[c]);
  return acc;
}

/// Counts of each statistic value over S_n; coeffs[v] is the number of
/// permutations with value v, trailing zeros trimmed. Sum of coeffs = n!.
struct DistPolynomial {
  int n = 0;
  std::vector<std::uint64_t> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::uint64_t total() const;

  bool operator==(const DistPolynomial&) const = default;
};

/// Coefficients of [n]!_q = prod_{i=1..n} (1 + q + ... + q^{i-1}).
DistPolynomial qfactorial(int n);

DistPolynomial distribution(const Registry& reg, std::string_view stat_name,
                            int n, int threads = 1);

/// distribution == qfactorial(n), resp. == distribution(des, n).
bool is_mahonian(const Registry& reg, std::string_view stat_name, int n,
                 int threads = 1);
bool is_eulerian(const Registry& reg, std::string_view stat_name, int n,
                 int threads = 1);

/// Joint counts over (Eulerian value, Mahonian value): n rows for values
/// 0..n-1, n(n-1)/2 + 1 columns.
struct JointDist {
  int n = 0;
  std::vector<std::vector<std::uint64_t>> rows;

  std::vector<std::uint64_t> row_sums() const;
  std::vector<std::uint64_t> col_sums() const;

  bool operator==(const JointDist&) const = default;
};

JointDist joint(const Registry& reg, std::string_view eulerian_name,
                std::string_view mahonian_name, int n, int threads = 1);

using StatPair = std::pair<std::string, std::string>;  // (eulerian, mahonian)

bool equidistributed(const Registry& reg, const StatPair& a, const StatPair& b,
                     int n, int threads = 1);

/// Groups the named statistics by equality of joint(eulerian, ., n).
std::vector<std::vector<std::string>> partition_classes(
    const Registry& reg, std::span<const std::string> stat_names,
    std::string_view eulerian_name, int n, int threads = 1);

/// Every (candidate S, group element g) with S(g(p)) == target(p) for all
/// p in S_n and all 2 <= n <= n_max. Empty means no trivial equivalence.
std::vector<std::pair<std::string, GroupElement>> equiv_search(
    const Registry& reg, std::string_view target_name,
    std::span<const std::string> candidate_names, int n_max);

}  // namespace permstat
