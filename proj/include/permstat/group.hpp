#pragma once

#include <array>
#include <set>
#include <string_view>

#include "permstat/permutation.hpp"

namespace permstat {

/// An element of the order-8 group generated by inversion (I), word
/// reversal (R) and letter complementation (C). Multi-letter names apply
/// left to right: p^{IC} is the complement of the inverse.
///
/// Internally an element is the normal form w0^a . p^s . w0^b (w0 the
/// decreasing permutation, s = +/-1): complementation multiplies by w0 on
/// the left, reversal on the right, so composition closes on these triples.
class GroupElement {
 public:
  GroupElement() = default;  // identity

  /// Accepts the eight canonical names e, I, R, C, IR, IC, RC, IRC.
  static GroupElement from_name(std::string_view name);

  static const std::array<GroupElement, 8>& all();

  std::string_view name() const;

  GroupElement inverse() const;

  Permutation apply(const Permutation& p) const;

  /// apply(compose(g, h), p) == apply(h, apply(g, p)): g acts first.
  friend GroupElement compose(GroupElement g, GroupElement h);

  bool operator==(const GroupElement&) const = default;
  auto operator<=>(const GroupElement&) const = default;

 private:
  GroupElement(bool invert, bool complement, bool reverse)
      : invert_(invert), complement_(complement), reverse_(reverse) {}

  bool invert_ = false;      // take p^{-1} first
  bool complement_ = false;  // then v -> n+1-v on letters
  bool reverse_ = false;     // then reverse the word
};

Permutation apply(GroupElement g, const Permutation& p);

/// { apply(g, p) : g in G }, deduplicated. Size divides 8.
std::set<Permutation> orbit(const Permutation& p);

}  // namespace permstat
