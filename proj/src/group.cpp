#include "permstat/group.hpp"

#include <algorithm>

namespace permstat {

namespace {

struct NamedTriple {
  std::string_view name;
  bool invert, complement, reverse;
};

// Canonical (shortest) I/R/C words for the eight normal forms.
constexpr NamedTriple kTable[8] = {
    {"e", false, false, false},  {"I", true, false, false},
    {"R", false, false, true},   {"C", false, true, false},
    {"IR", true, false, true},   {"IC", true, true, false},
    {"RC", false, true, true},   {"IRC", true, true, true},
};

}  // namespace

GroupElement GroupElement::from_name(std::string_view name) {
  for (const auto& t : kTable)
    if (t.name == name) return GroupElement(t.invert, t.complement, t.reverse);
  throw Error(Errc::unknown_name,
              "unknown group element '" + std::string(name) + "'");
}

const std::array<GroupElement, 8>& GroupElement::all() {
  static const std::array<GroupElement, 8> elems = [] {
    std::array<GroupElement, 8> a;
    for (size_t i = 0; i < 8; ++i)
      a[i] = GroupElement(kTable[i].invert, kTable[i].complement,
                          kTable[i].reverse);
    return a;
  }();
  return elems;
}

std::string_view GroupElement::name() const {
  for (const auto& t : kTable)
    if (t.invert == invert_ && t.complement == complement_ &&
        t.reverse == reverse_)
      return t.name;
  return "?";
}

GroupElement GroupElement::inverse() const {
  // w0^a p w0^b is an involution; (w0^a p^-1 w0^b)^-1 swaps the sides.
  if (!invert_) return *this;
  return GroupElement(true, reverse_, complement_);
}

GroupElement compose(GroupElement g, GroupElement h) {
  // h(g(p)) with g = (s1,a1,b1), h = (s2,a2,b2) in normal form
  // w0^a p^s w0^b; conjugating through h's inversion swaps g's sides.
  if (!h.invert_)
    return GroupElement(g.invert_, g.complement_ != h.complement_,
                        g.reverse_ != h.reverse_);
  return GroupElement(!g.invert_, g.reverse_ != h.complement_,
                      g.complement_ != h.reverse_);
}

Permutation GroupElement::apply(const Permutation& p) const {
  const int n = p.size();
  std::vector<int> w = invert_ ? p.inverse().word() : p.word();
  if (complement_)
    for (int& v : w) v = n + 1 - v;
  if (reverse_) std::reverse(w.begin(), w.end());
  return Permutation::unchecked(std::move(w));
}

Permutation apply(GroupElement g, const Permutation& p) { return g.apply(p); }

std::set<Permutation> orbit(const Permutation& p) {
  std::set<Permutation> out;
  for (const GroupElement& g : GroupElement::all()) out.insert(g.apply(p));
  return out;
}

}  // namespace permstat
