#include <doctest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "maxpoint/counterexample.hpp"
#include "maxpoint/factorization.hpp"
#include "maxpoint/scott.hpp"
#include "oracles.hpp"

using namespace maxpoint;

namespace {

FinitePoset diamond() {
  return FinitePoset::build({"bot", "a", "b", "top"}, {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
}

const ScottOptions kExhaustive{CheckPath::Exhaustive, {}};
const ScottOptions kShortcut{CheckPath::Shortcut, {}};

std::vector<PointMask> sorted(std::vector<PointMask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("scott open examples") {
  const auto c = testgen::chain(3);
  CHECK(is_scott_open(c, c.set_of({"e2"})));
  CHECK_FALSE(is_scott_open(c, c.set_of({"e0"})));
  const auto d = diamond();
  CHECK(is_scott_open(d, d.set_of({"a", "top"}), kExhaustive));
  CHECK(is_scott_open(d, d.set_of({"a", "top"}), kShortcut));
  CHECK(is_scott_closed(d, d.set_of({"bot", "b"})));
}

TEST_CASE("scott_opens examples") {
  CHECK(scott_opens(testgen::antichain(2)).opens().size() == 4);
  const auto two = scott_opens(testgen::chain(2));
  CHECK(two.opens() == std::vector<PointMask>{0b00, 0b10, 0b11});
  CHECK(scott_opens(testgen::chain(1)).opens().size() == 2);
  CHECK_THROWS_AS(scott_opens(testgen::antichain(21)), Error);
  CHECK(scott_opens(testgen::antichain(21), EnumerationLimits{21}).opens().size() == (std::size_t{1} << 21));
}

TEST_CASE("scott opens agree with the brute-force oracle on every poset up to 5 elements") {
  for (const auto& p : testgen::posets_up_to(5)) {
    const auto t = scott_opens(p);
    CHECK(t.is_topology());
    CHECK(sorted(t.opens()) == sorted(oracle::scott_opens(p)));
    for (auto u : t.opens()) {
      Bits b(p.size(), u);
      CHECK(is_scott_open(p, p.set_of_bits(b), kExhaustive));
      CHECK(is_scott_open(p, p.set_of_bits(b), kShortcut));
    }
  }
}

TEST_CASE("exhaustive and shortcut way-below agree with <= and the oracle") {
  for (const auto& p : testgen::posets_up_to(5)) {
    const auto ex = way_below_relation(p, kExhaustive);
    const auto sc = way_below_relation(p, kShortcut);
    CHECK(ex == sc);
    for (std::size_t x = 0; x < p.size(); ++x) {
      for (std::size_t y = 0; y < p.size(); ++y) {
        CHECK(way_below(p, x, y, kExhaustive) == p.leq(x, y));
        CHECK(oracle::way_below(p, x, y) == p.leq(x, y));
      }
    }
    CHECK(compact_elements(p, kExhaustive) == p.full_set());
  }
}

TEST_CASE("way-below examples") {
  const auto c = testgen::chain(2);
  CHECK(way_below(c, 0, 1));
  CHECK_FALSE(way_below(c, 1, 0));
  const auto d = diamond();
  CHECK(way_below(d, 0, 3, kExhaustive));
  CHECK_FALSE(way_below(d, 1, 2, kExhaustive));
}

TEST_CASE("compactness restated through principal upper sets") {
  for (const auto& p : testgen::posets_up_to(4)) {
    const auto k = compact_elements(p, kExhaustive);
    for (std::size_t a = 0; a < p.size(); ++a) {
      CHECK(k.contains(a) == is_scott_open(p, up_set(p, p.singleton(a)), kExhaustive));
    }
  }
}

TEST_CASE("classification predicates") {
  for (const auto& p : testgen::posets_up_to(5)) {
    CHECK(is_continuous(p, kExhaustive));
    CHECK(is_algebraic(p, kExhaustive));
    CHECK(is_ideal_domain(p, kExhaustive));
    CHECK(is_bounded_complete(p) == oracle::bounded_complete(p));
  }
  const auto v = FinitePoset::build({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"a", "d"}, {"b", "d"}});
  CHECK_FALSE(is_bounded_complete(v));
  CHECK(is_bounded_complete(diamond()));
  const auto t = truncate_L(2, 2, Space::L);
  CHECK(is_ideal_domain(t.poset));
  CHECK(compact_elements(t.poset) == t.poset.full_set());
}

TEST_CASE("bounded completeness agrees with the oracle on random posets") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = testgen::random_poset(rng, 7, 0.35);
    CHECK(is_bounded_complete(p) == oracle::bounded_complete(p));
  }
}

TEST_CASE("relative topology and G-delta sets") {
  const auto c = testgen::chain(2);
  const auto rel = relative_topology(c, maximal_elements(c));
  CHECK(rel.opens() == std::vector<PointMask>{0, 1});
  CHECK(relative_topology(c, c.empty_set()).opens() == std::vector<PointMask>{0});

  const Topology sierpinski({"a", "b"}, {0b00, 0b10, 0b11});
  CHECK(sierpinski.is_topology());
  CHECK_FALSE(is_gdelta(sierpinski, 0b01));
  CHECK(is_gdelta(sierpinski, 0b10));

  for (const auto& p : testgen::posets_up_to(5)) {
    const auto sigma = scott_opens(p);
    PointMask max = 0;
    for (auto i : maximal_elements(p).indices()) max |= point_bit(i);
    CHECK(is_gdelta(sigma, max));
    const auto r = relative_topology(p, maximal_elements(p));
    CHECK(r.is_t1());
    CHECK(r.is_discrete());
  }
}

TEST_CASE("the chain-under-pair truncation has a discrete maximal space") {
  const auto m = chain_under_pair_model(1);
  CHECK(m.grid_topology().is_discrete());
}

TEST_CASE("directed subsets carry their suprema") {
  const auto d = diamond();
  const auto all = directed_subsets(d);
  for (const auto& ds : all) {
    CHECK(is_directed(d, ds.members));
    CHECK(ds.sup == supremum(d, ds.members));
  }
  // 4 singletons, 5 comparable pairs, {bot,a,top}, {bot,b,top}, {a,b,top}, {bot,a,b,top}
  CHECK(all.size() == 13);
}
