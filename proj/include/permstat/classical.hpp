#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

/// Partition of 1..n into maximal strictly decreasing runs. For a block of
/// length >= 2 the closer c(B) is its first letter and the opener o(B) its
/// last, so c(B) > o(B).
struct DescentBlock {
  int start = 0, end = 0;  // positions, 1-based inclusive
  int length() const { return end - start + 1; }
};

struct DescentBlockDecomposition {
  std::vector<DescentBlock> blocks;
};

DescentBlockDecomposition descent_blocks(const Permutation& p);

/// Descent-side partial statistics. A descent is p(i) > p(i+1); the bottom
/// is either the index i (idx variants) or the letter p(i+1) (val variants).
struct DescentPartials {
  std::int64_t des = 0;       // number of descents
  std::int64_t maj = 0;       // sum of descent indices
  std::int64_t dtop = 0;      // sum of descent tops p(i)
  std::int64_t dbot_idx = 0;  // sum of descent indices i
  std::int64_t dbot_val = 0;  // sum of letters p(i+1)
  std::int64_t ddif_idx = 0;  // dtop - dbot_idx
  std::int64_t ddif_val = 0;  // dtop - dbot_val
};

DescentPartials descent_partials(const Permutation& p);

/// Sum over letters a of the number of blocks of length >= 2 strictly right
/// of a's block with o(B) < a < c(B).
std::int64_t res(const Permutation& p);

/// Excedance-side partials. An excedance is p(i) > i.
struct ExcedancePartials {
  std::int64_t exc = 0;
  std::int64_t ebot = 0;  // sum of excedance positions
  std::int64_t etop = 0;  // sum of letters at excedance positions
  std::int64_t edif = 0;  // etop - ebot
};

ExcedancePartials excedance_partials(const Permutation& p);

/// p split into the excedance subword and the rest, original order kept.
struct ExcedanceSplit {
  std::vector<int> exceeding;  // letters with p(i) > i
  std::vector<int> rest;       // letters with p(i) <= i
};

ExcedanceSplit exc_split(const Permutation& p);

/// Inversions of an arbitrary word of distinct letters.
std::int64_t inversions(std::span<const int> word);

/// inv(p); equals edif + ine.
std::int64_t inv(const Permutation& p);

/// inv of the excedance subword plus inv of the rest.
std::int64_t ine(const Permutation& p);

/// Sum over excedance positions i of #{k < i : p(k) <= i}.
std::int64_t hage(const Permutation& p);

enum class Composite { den, mak_idx, mak_val, mad_idx, mad_val, hag };

/// den = ebot + ine; mak = dbot + res; mad = ddif + res (idx/val per the
/// descent-bottom variant); hag = edif + inv(p_E) - inv(p_N) + hage.
std::int64_t composite(Composite which, const Permutation& p);

/// Name-based lookup; throws Errc::unknown_name.
std::int64_t composite(std::string_view name, const Permutation& p);

}  // namespace permstat
