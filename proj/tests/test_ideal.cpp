#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "maxpoint/ideal.hpp"
#include "oracles.hpp"

using namespace maxpoint;

TEST_CASE("ideal examples") {
  const auto c = testgen::chain(2);
  const auto ideals = all_ideals(c);
  REQUIRE(ideals.size() == 2);
  CHECK(ideals[0].label() == "{e0}");
  CHECK(ideals[1].label() == "{e0,e1}");

  const auto a = all_ideals(testgen::antichain(2));
  REQUIRE(a.size() == 2);
  CHECK(a[0].label() == "{e0}");
  CHECK(a[1].label() == "{e1}");
  CHECK(all_ideals(testgen::chain(1)).size() == 1);
}

TEST_CASE("principal ideals") {
  const auto c = testgen::chain(2);
  CHECK(principal_ideal(c, "e1").members() == c.full_set());
  CHECK(principal_ideal(c, "e0").members() == c.set_of({"e0"}));
  CHECK_THROWS_AS(principal_ideal(c, "nope"), Error);
  const auto d = FinitePoset::build({"bot", "a", "b", "top"}, {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
  CHECK(principal_ideal(d, "top").members() == d.full_set());
}

TEST_CASE("Ideal::make rejects non-ideals") {
  const auto a = testgen::antichain(2);
  CHECK_THROWS_AS(Ideal::make(a, a.full_set()), Error);
  CHECK_THROWS_AS(Ideal::make(a, a.empty_set()), Error);
  const auto c = testgen::chain(2);
  CHECK_FALSE(ideal_violation(c, c.set_of({"e1"})).empty());
  CHECK(ideal_violation(c, c.set_of({"e0"})).empty());
}

TEST_CASE("ideals match the brute-force oracle and are all principal") {
  for (const auto& q : testgen::posets_up_to(5)) {
    const auto ideals = all_ideals(q);
    auto expected = oracle::ideals(q);
    std::vector<oracle::Mask> got;
    for (const auto& i : ideals) got.push_back(i.members().bits().to_ulong());
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);
    CHECK(ideals.size() == q.size());
    for (std::size_t e = 0; e < q.size(); ++e) {
      CHECK(std::find(ideals.begin(), ideals.end(), principal_ideal(q, e)) != ideals.end());
    }
  }
}

TEST_CASE("the ideal completion of a finite poset is isomorphic to it") {
  for (const auto& q : testgen::posets_up_to(5)) {
    const auto idl = idl_poset(q);
    CHECK(order_isomorphic(idl.poset, q));
    CHECK(is_algebraic(idl.poset));
    CHECK(compact_elements(idl.poset) == idl.poset.set_of(idl.principal));
    for (std::size_t a = 0; a < q.size(); ++a)
      for (std::size_t b = 0; b < q.size(); ++b) CHECK(q.leq(a, b) == idl.poset.leq(idl.principal[a], idl.principal[b]));
  }
  const auto anti = idl_poset(testgen::antichain(3));
  CHECK(order_isomorphic(anti.poset, testgen::antichain(3)));
}
