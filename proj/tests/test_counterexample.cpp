#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "maxpoint/counterexample.hpp"
#include "maxpoint/scott.hpp"

using namespace maxpoint;

namespace {

SymbolicOpen uniform_open(Nat t, bool level1 = true) { return SymbolicOpen{ThresholdRule::uniform(t), level1, {}}; }

std::vector<LPoint> sample_points(std::mt19937_64& rng, int count) {
  std::uniform_int_distribution<Nat> small(0, 4);
  std::vector<LPoint> out;
  // A few fixed functions so that (φ,·) points share φ often enough.
  const std::vector<PhiFunc> phis{PhiFunc{}, PhiFunc({{0, 2}, {1, 3}}, 0), PhiFunc({{2, 4}}, 1), PhiFunc({}, 3)};
  for (int n = 0; n < count; ++n) {
    switch (rng() % 3) {
      case 0: out.push_back(ChainPt{small(rng), small(rng)}); break;
      case 1: out.push_back(ChainTop{small(rng)}); break;
      default: out.push_back(PhiPt{phis[rng() % phis.size()], static_cast<int>(rng() % 2)}); break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("order on L") {
  CHECK(l_leq(ChainPt{1, 2}, ChainPt{1, 5}));
  CHECK_FALSE(l_leq(ChainPt{1, 2}, ChainPt{2, 5}));
  CHECK(l_leq(ChainPt{1, 2}, ChainTop{1}));
  const PhiFunc phi({{3, 4}}, 1);
  CHECK(l_leq(ChainPt{3, phi(3)}, PhiPt{phi, 0}));
  CHECK(l_leq(PhiPt{phi, 0}, PhiPt{phi, 1}));
  CHECK(l_leq(ChainPt{3, 2}, PhiPt{phi, 1}));
  CHECK_FALSE(l_leq(ChainPt{3, 5}, PhiPt{phi, 1}));
  CHECK_FALSE(l_leq(ChainTop{3}, PhiPt{phi, 1}));
  CHECK(PhiFunc({{0, 1}, {2, 1}}, 1) == PhiFunc({}, 1));
  CHECK(l_leq(PhiPt{PhiFunc({{0, 0}}, 0), 0}, PhiPt{PhiFunc{}, 1}));
}

TEST_CASE("the order on L is a partial order on samples") {
  std::mt19937_64 rng(31);
  const auto pts = sample_points(rng, 60);
  for (const auto& a : pts) {
    CHECK(l_leq(a, a));
    for (const auto& b : pts) {
      if (l_leq(a, b) && l_leq(b, a)) CHECK(a == b);
      for (const auto& c : pts) {
        if (l_leq(a, b) && l_leq(b, c)) CHECK(l_leq(a, c));
      }
    }
  }
}

TEST_CASE("symbolic membership") {
  const SymbolicOpen u{ThresholdRule(Nat{3}, {{1, std::nullopt}}), false, {}};
  CHECK(symbolic_member(u, ChainPt{0, 3}));
  CHECK_FALSE(symbolic_member(u, ChainPt{0, 2}));
  CHECK_FALSE(symbolic_member(u, ChainTop{1}));
  CHECK(symbolic_member(u, ChainTop{0}));
  CHECK(symbolic_member(u, PhiPt{PhiFunc({{4, 3}}, 0), 0}));
  CHECK_FALSE(symbolic_member(u, PhiPt{PhiFunc({{1, 9}}, 0), 1}));
  CHECK(symbolic_member(u, PhiPt{PhiFunc({}, 5), 0}));
}

TEST_CASE("symbolic membership is upward closed on samples") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const auto u = testgen::random_covering_open(rng, 4);
    REQUIRE(validate_open(u, Space::L));
    const auto pts = sample_points(rng, 50);
    for (const auto& p : pts)
      for (const auto& q : pts)
        if (l_leq(p, q) && symbolic_member(u, p)) CHECK(symbolic_member(u, q));
  }
}

TEST_CASE("open validation") {
  CHECK(validate_open(uniform_open(0), Space::L));
  CHECK(contains_max(uniform_open(0), Space::L));

  SymbolicOpen bad{ThresholdRule(Nat{0}, {{0, std::nullopt}}), false, {}};
  PhiCylinder level0_only;
  level0_only.levels = {true, false};
  bad.extra_phi.push_back(level0_only);
  CHECK_FALSE(validate_open(bad, Space::L));
  CHECK(validate_open(bad, Space::LHat));

  for (Nat k = 0; k < 6; ++k) {
    CHECK(validate_open(lhat_open(k), Space::LHat));
    CHECK(contains_max(lhat_open(k), Space::LHat));
    CHECK_FALSE(validate_open(lhat_open(k), Space::L));
  }
  CHECK_FALSE(contains_max(SymbolicOpen{ThresholdRule(std::nullopt, {}), true, {}}, Space::L));
  // Threshold 0 forces every (φ,b) even without allPhiLevel1.
  CHECK(contains_max(uniform_open(0, false), Space::L));
  // Threshold 2 leaves (φ≡0,1) out.
  CHECK_FALSE(contains_max(uniform_open(2, false), Space::L));
  CHECK_FALSE(validate_open(uniform_open(0), Space::LHat));
}

TEST_CASE("L̂ opens exclude the expected chain points") {
  CHECK_FALSE(symbolic_member(lhat_open(5), ChainPt{2, 5}));
  CHECK(symbolic_member(lhat_open(5), ChainPt{2, 6}));
  CHECK(symbolic_member(lhat_open(5), ChainPt{6, 0}));
  for (Nat k = 0; k < 10; ++k) {
    CHECK(symbolic_member(lhat_open(k), ChainTop{k + 3}));
    CHECK(symbolic_member(lhat_open(k), PhiPt{PhiFunc{}, 0}));
  }
}

TEST_CASE("diagonal witness") {
  const auto fam = OpenFamily::finite({uniform_open(0), uniform_open(1), uniform_open(2)});
  const auto w = diagonal_witness(fam);
  CHECK(w.phi.exceptions_string() == "{0:0,1:1,2:2}");
  CHECK(w.phi.default_value() == 0);
  CHECK(w.certificate.all_ok());
  for (Nat j = 0; j < 3; ++j) CHECK(symbolic_member(fam.at(j), PhiPt{w.phi, 0}));
  CHECK_FALSE(is_maximal(PhiPt{w.phi, 0}, Space::L));

  const auto single = diagonal_witness(OpenFamily::finite({uniform_open(0)}));
  CHECK(single.phi == PhiFunc{});

  const auto absent = OpenFamily::finite({SymbolicOpen{ThresholdRule(std::nullopt, {}), true, {}}});
  try {
    diagonal_witness(absent);
    FAIL("expected NotCoveringMax");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCoveringMax);
  }
}

TEST_CASE("diagonal witness with offsets and rule families") {
  const auto fam = OpenFamily::finite({uniform_open(1), uniform_open(4)});
  const std::vector<Nat> offsets{2, 0};
  const auto w = diagonal_witness(fam, offsets);
  CHECK(w.phi(0) == 3);
  CHECK(w.phi(1) == 4);
  CHECK(w.certificate.all_ok());

  const auto rule = OpenFamily::rule([](Nat j) { return uniform_open(j * j); }, 30, "threshold j^2");
  const auto wr = diagonal_witness(rule);
  CHECK(wr.certificate.all_ok());
  CHECK(wr.phi(5) == 25);
}

TEST_CASE("L̂ certificate") {
  const auto rep = gdelta_certificate_lhat(12);
  CHECK(rep.all_ok());
}

TEST_CASE("truncations") {
  const auto t1 = truncate_L(1, 1, Space::L);
  REQUIRE(t1.poset.size() == 4);
  CHECK(t1.poset.labels() == std::vector<std::string>{"(0,0)", "(0,inf)", "(phi[0],0)", "(phi[0],1)"});
  CHECK(t1.poset.leq(0, 1));
  CHECK(t1.poset.leq(0, 3));
  CHECK_FALSE(t1.poset.leq(1, 2));

  const auto t2 = truncate_L(2, 2, Space::L);
  CHECK(t2.poset.size() == 14);
  CHECK(is_dcpo(t2.poset));
  const auto max = maximal_elements(t2.poset);
  CHECK(max.size() == 2 + 4);
  for (auto i : max.indices()) CHECK(is_maximal(t2.points[i], Space::L));

  const auto h = truncate_L(2, 2, Space::LHat);
  CHECK(h.poset.size() == 10);
  for (auto i : maximal_elements(h.poset).indices()) CHECK(is_maximal(h.points[i], Space::LHat));
  CHECK(maximal_elements(h.poset).size() == 6);

  CHECK(truncate_L(3, 3, Space::L).poset.size() == 3 * 4 + 27 * 2);
  CHECK(t2.find(ChainTop{1}).has_value());
  CHECK_THROWS_AS(truncate_L(20, 20, Space::L), Error);
  CHECK_THROWS_AS(truncate_L(0, 2, Space::L), Error);
}

TEST_CASE("symbolic opens restrict to Scott opens of truncations") {
  std::mt19937_64 rng(41);
  const auto t = truncate_L(3, 3, Space::L);
  const ScottOptions bigger{CheckPath::Shortcut, {}};
  for (int trial = 0; trial < 30; ++trial) {
    const auto u = testgen::random_covering_open(rng, 3);
    Bits bits(t.poset.size());
    for (std::size_t i = 0; i < t.points.size(); ++i)
      if (symbolic_member(u, t.points[i])) bits.set(i);
    const auto s = t.poset.set_of_bits(bits);
    CHECK(is_scott_open(t.poset, s, bigger));
    CHECK(up_set(t.poset, s) == s);
  }
}
