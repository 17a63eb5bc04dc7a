#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "permstat/classical.hpp"
#include "permstat/pattern.hpp"

using namespace permstat;

TEST_CASE("pattern parsing") {
  const auto pat = VincularPattern::parse("cb-a");
  CHECK(pat.ranks() == std::vector<int>{3, 2, 1});
  CHECK(pat.adjacent() == std::vector<bool>{true, false});
  CHECK(VincularPattern::parse("b-a").adjacent() == std::vector<bool>{false});
  CHECK(VincularPattern::parse("a").length() == 1);

  CHECK_THROWS_AS(VincularPattern::parse("aa"), Error);
  CHECK_THROWS_AS(VincularPattern::parse("-ab"), Error);
  CHECK_THROWS_AS(VincularPattern::parse("ab-"), Error);
  CHECK_THROWS_AS(VincularPattern::parse("a--b"), Error);
  CHECK_THROWS_AS(VincularPattern::parse("xyz"), Error);
  CHECK_THROWS_AS(VincularPattern::parse(""), Error);
}

TEST_CASE("descending pattern counts on pi0") {
  const Permutation p0 = special(Special::pi0, 6);
  CHECK(count_vincular(p0, "ba") == 5);
  CHECK(count_vincular(p0, "cba") == 4);
  CHECK(count_vincular(p0, "cb-a") == 10);
  CHECK(count_vincular(p0, "c-ba") == 10);
}

TEST_CASE("identity has no descending occurrences") {
  CHECK(count_vincular(special(Special::identity, 6), "ba") == 0);
  CHECK(count_vincular(special(Special::identity, 6), "c-ba") == 0);
}

TEST_CASE("longer pattern than word") {
  CHECK(count_vincular(parse("21"), "cba") == 0);
}

TEST_CASE("matches the combination-scan oracle") {
  const std::vector<std::string> pats = {"ba",   "b-a", "cba", "cb-a",
                                         "c-ba", "abc", "ca-b", "d-cba"};
  oracles::for_all_perms(5, [&](const std::vector<int>& w) {
    const Permutation p = Permutation::unchecked(w);
    for (const auto& text : pats) {
      const auto pat = VincularPattern::parse(text);
      std::vector<bool> adj(pat.adjacent().begin(), pat.adjacent().end());
      CHECK(count_vincular(p, pat) == oracles::vincular(w, pat.ranks(), adj));
    }
  });
  CHECK(count_vincular(parse("25413"), "c-ba") ==
        oracles::vincular({2, 5, 4, 1, 3}, {3, 2, 1}, {false, true}));
}

TEST_CASE("b-a counts inversions") {
  oracles::for_all_perms(6, [](const std::vector<int>& w) {
    const Permutation p = Permutation::unchecked(w);
    CHECK(count_vincular(p, "b-a") == inv(p));
  });
}

TEST_CASE("letters rank by alphabet, not appearance") {
  // "ca" and "ba" are the same relative pattern
  oracles::for_all_perms(4, [](const std::vector<int>& w) {
    const Permutation p = Permutation::unchecked(w);
    CHECK(count_vincular(p, "ca") == count_vincular(p, "ba"));
  });
}
