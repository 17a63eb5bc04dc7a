#include "permstat/classical.hpp"

#include <string>

namespace permstat {

DescentBlockDecomposition descent_blocks(const Permutation& p) {
  DescentBlockDecomposition out;
  const int n = p.size();
  int start = 1;
  for (int i = 1; i < n; ++i) {
    if (p(i) > p(i + 1)) continue;  // still descending
    out.blocks.push_back({start, i});
    start = i + 1;
  }
  out.blocks.push_back({start, n});
  return out;
}

DescentPartials descent_partials(const Permutation& p) {
  DescentPartials out;
  for (int i = 1; i < p.size(); ++i) {
    if (p(i) <= p(i + 1)) continue;
    ++out.des;
    out.maj += i;
    out.dtop += p(i);
    out.dbot_idx += i;
    out.dbot_val += p(i + 1);
  }
  out.ddif_idx = out.dtop - out.dbot_idx;
  out.ddif_val = out.dtop - out.dbot_val;
  return out;
}

std::int64_t res(const Permutation& p) {
  const auto decomposition = descent_blocks(p);
  const auto& blocks = decomposition.blocks;
  std::int64_t total = 0;
  for (size_t bi = 0; bi < blocks.size(); ++bi) {
    for (int pos = blocks[bi].start; pos <= blocks[bi].end; ++pos) {
      const int a = p(pos);
      for (size_t bj = bi + 1; bj < blocks.size(); ++bj) {
        if (blocks[bj].length() < 2) continue;  // singletons cannot embrace
        if (p(blocks[bj].end) < a && a < p(blocks[bj].start)) ++total;
      }
    }
  }
  return total;
}

ExcedancePartials excedance_partials(const Permutation& p) {
  ExcedancePartials out;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) <= i) continue;
    ++out.exc;
    out.ebot += i;
    out.etop += p(i);
  }
  out.edif = out.etop - out.ebot;
  return out;
}

ExcedanceSplit exc_split(const Permutation& p) {
  ExcedanceSplit out;
  for (int i = 1; i <= p.size(); ++i)
    (p(i) > i ? out.exceeding : out.rest).push_back(p(i));
  return out;
}

std::int64_t inversions(std::span<const int> word) {
  std::int64_t total = 0;
  for (size_t i = 0; i < word.size(); ++i)
    for (size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j]) ++total;
  return total;
}

std::int64_t inv(const Permutation& p) { return inversions(p.word()); }

std::int64_t ine(const Permutation& p) {
  const auto split = exc_split(p);
  return inversions(split.exceeding) + inversions(split.rest);
}

std::int64_t hage(const Permutation& p) {
  std::int64_t total = 0;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) <= i) continue;
    for (int k = 1; k < i; ++k)
      if (p(k) <= i) ++total;
  }
  return total;
}

std::int64_t composite(Composite which, const Permutation& p) {
  switch (which) {
    case Composite::den:
      return excedance_partials(p).ebot + ine(p);
    case Composite::mak_idx:
      return descent_partials(p).dbot_idx + res(p);
    case Composite::mak_val:
      return descent_partials(p).dbot_val + res(p);
    case Composite::mad_idx:
      return descent_partials(p).ddif_idx + res(p);
    case Composite::mad_val:
      return descent_partials(p).ddif_val + res(p);
    case Composite::hag: {
      const auto split = exc_split(p);
      return excedance_partials(p).edif + inversions(split.exceeding) -
             inversions(split.rest) + hage(p);
    }
  }
  throw Error(Errc::unknown_name, "bad composite");
}

std::int64_t composite(std::string_view name, const Permutation& p) {
  if (name == "den") return composite(Composite::den, p);
  if (name == "mak_idx") return composite(Composite::mak_idx, p);
  if (name == "mak_val") return composite(Composite::mak_val, p);
  if (name == "mad_idx") return composite(Composite::mad_idx, p);
  if (name == "mad_val") return composite(Composite::mad_val, p);
  if (name == "hag") return composite(Composite::hag, p);
  throw Error(Errc::unknown_name,
              "unknown composite '" + std::string(name) + "'");
}

}  // namespace permstat
