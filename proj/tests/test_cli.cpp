#include <doctest.h>

#include <sstream>

#include "maxpoint/cli.hpp"

namespace {

const std::string kData = MAXPOINT_TEST_DATA;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = maxpoint::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& piece) { return text.find(piece) != std::string::npos; }

}  // namespace

TEST_CASE("check") {
  const auto r = run({"check", "--input", kData + "/chain2.json"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "dcpo: yes\ncontinuous: yes\nalgebraic: yes\nideal domain: yes\n"));
  CHECK(has(r.out, "|Max|: 1\n"));
  CHECK(has(run({"check", "--input", kData + "/vshape.json"}).out, "bounded complete: yes"));
}

TEST_CASE("topology and maxspace") {
  const auto t = run({"topology", "--input", kData + "/diamond.json"});
  CHECK(t.code == 0);
  CHECK(has(t.out, "|σ(P)|: 6\n"));
  const auto m = run({"maxspace", "--input", kData + "/vshape.json"});
  CHECK(m.code == 0);
  CHECK(has(m.out, "Max(P) G-delta in σ(P): VERIFIED"));
  CHECK(run({"topology", "--input", kData + "/diamond.json", "--max-elements", "2"}).code == 2);
}

TEST_CASE("idl") {
  const auto r = run({"idl", "--input", kData + "/diamond.json"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "|Idl(P)|: 4\n"));
  CHECK(has(r.out, "cover: {bot} < {bot,l}\n"));
  CHECK(has(r.out, "Idl(P) ≅ P: yes"));
}

TEST_CASE("factor") {
  const auto r = run({"factor", "--input", kData + "/discrete_2x1.json"});
  CHECK(r.code == 0);
  for (int c = 1; c <= 6; ++c) CHECK(has(r.out, "claim " + std::to_string(c) + " ("));
  CHECK_FALSE(has(r.out, "FAILED"));
  CHECK(has(r.out, "|Max(P_X)|: 2\n"));

  const auto other = run({"factor", "--input", kData + "/discrete_3x2.json", "--y0", "1"});
  CHECK(other.code == 0);
  CHECK(has(other.out, "y0: 1\n"));

  const auto bad = run({"factor", "--input", kData + "/bottom_2x2.json"});
  CHECK(bad.code == 1);
  CHECK(has(bad.out, "claim 1 (⊑ is a partial order on Q): FAILED"));

  CHECK(run({"factor", "--input", kData + "/discrete_3x2.json", "--y0", "nope"}).code == 2);
}

TEST_CASE("lower-model") {
  const auto r = run({"lower-model", "--input", kData + "/discrete_3x2.json", "--y0", "1"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "↓(X×{y}): {a1,b1,c1}\n"));
  CHECK(has(r.out, "Scott closed slice models X: VERIFIED"));
}

TEST_CASE("diagonal") {
  const auto r = run({"diagonal", "--input", kData + "/family3.json"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "φ exceptions: {0:0,1:1,2:2}\n"));
  CHECK(has(r.out, "(φ,0) ∈ ⋂U_j: VERIFIED\n"));
  CHECK(has(r.out, "(φ,0) maximal in L: NO\n"));
  const auto bad = run({"diagonal", "--input", kData + "/family_absent.json"});
  CHECK(bad.code == 2);
  CHECK(has(bad.err, "NotCoveringMax"));
}

TEST_CASE("lhat-cert") {
  const auto r = run({"lhat-cert", "--eval-bound", "10"});
  CHECK(r.code == 0);
  CHECK_FALSE(has(r.out, "FAILED"));
  CHECK(has(r.out, "bound: 10\n"));
}

TEST_CASE("truncate-l and hasse") {
  const auto r = run({"truncate-l", "--width", "2", "--depth", "2", "--mode", "Lhat"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "\"(phi[1,1],0)\""));
  CHECK_FALSE(has(r.out, "],1)"));
  CHECK(run({"truncate-l", "--mode", "M"}).code == 2);

  const auto h = run({"hasse", "--input", kData + "/diamond.json"});
  CHECK(h.code == 0);
  CHECK(has(h.out, "n0 -> n1;"));
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", "--input", kData + "/missing.json"}).code == 2);
  const auto cyc = run({"check", "--input", kData + "/cycle.json"});
  CHECK(cyc.code == 2);
  CHECK(has(cyc.err, "CycleDetected"));
  CHECK(run({"--help"}).code == 0);
}
