#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "permstat/permutation.hpp"

using namespace permstat;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::malformed;
}

}  // namespace

TEST_CASE("parse digit and comma forms") {
  CHECK(parse("25413").word() == std::vector<int>{2, 5, 4, 1, 3});
  CHECK(parse("1").word() == std::vector<int>{1});
  CHECK(parse("10,2,3,4,5,6,7,8,9,1").word() ==
        std::vector<int>{10, 2, 3, 4, 5, 6, 7, 8, 9, 1});
  CHECK(parse("2,1").word() == std::vector<int>{2, 1});
}

TEST_CASE("parse rejects non-permutations") {
  CHECK(code_of([] { parse("1224"); }) == Errc::malformed);
  CHECK(code_of([] { parse("135"); }) == Errc::malformed);
  CHECK(code_of([] { parse("0"); }) == Errc::malformed);
  CHECK(code_of([] { parse(""); }) == Errc::malformed);
  CHECK(code_of([] { parse("2,x,1"); }) == Errc::malformed);
  CHECK(code_of([] { parse("3,1"); }) == Errc::malformed);
  // digit form with n > 9 is never accepted, even if it looks plausible
  CHECK(code_of([] { parse("1234567891"); }) == Errc::ambiguous);
}

TEST_CASE("format round trip over S7") {
  oracles::for_all_perms(7, [](const std::vector<int>& w) {
    const Permutation p = Permutation::unchecked(w);
    CHECK(parse(format(p)) == p);
  });
  // comma form round trip
  const Permutation big = special(Special::pi1, 12);
  CHECK(parse(format(big)) == big);
}

TEST_CASE("inverse") {
  CHECK(parse("25413").inverse() == parse("41532"));
  const Permutation iota = Permutation::identity(6);
  CHECK(iota.inverse() == iota);
  oracles::for_all_perms(5, [](const std::vector<int>& w) {
    const Permutation p = Permutation::unchecked(w);
    CHECK(p.inverse().inverse() == p);
    for (int i = 1; i <= p.size(); ++i) CHECK(p.inverse()(p(i)) == i);
  });
}

TEST_CASE("embed") {
  CHECK(embed(parse("25413"), 1) == parse("254136"));
  const Permutation p = parse("3142");
  CHECK(embed(p, 0) == p);
  CHECK(embed(p, 3) == parse("3142567"));
}

TEST_CASE("special permutations") {
  CHECK(special(Special::identity, 4) == parse("1234"));
  CHECK(special(Special::pi0, 5) == parse("54321"));
  CHECK(special(Special::pi1, 5) == parse("23451"));
  CHECK(special(Special::pi1inv, 5) == parse("51234"));
  CHECK(special(Special::pi2, 5) == parse("52341"));
  CHECK(special(Special::near_identity, 4) == parse("2134"));
  CHECK(special(Special::pi1, 5).inverse() == special(Special::pi1inv, 5));

  CHECK(special(Special::pi0, 1) == parse("1"));
  CHECK(special(Special::pi1, 1) == parse("1"));
  CHECK(code_of([] { special(Special::pi2, 1); }) == Errc::size);
  CHECK(code_of([] { special(Special::near_identity, 1); }) == Errc::size);
  CHECK(code_of([] { special(Special::identity, 0); }) == Errc::size);
}
