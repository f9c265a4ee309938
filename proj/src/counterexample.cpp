#include "maxpoint/counterexample.hpp"

#include <set>

namespace maxpoint {

std::string to_string(Space s) { return s == Space::L ? "L" : "Lhat"; }

Nat PhiFunc::operator()(Nat i) const {
  auto it = exceptions_.find(i);
  return it == exceptions_.end() ? default_ : it->second;
}

PhiFunc PhiFunc::normalized() const {
  std::map<Nat, Nat> kept;
  for (auto [i, v] : exceptions_) {
    if (v != default_) kept.emplace(i, v);
  }
  return PhiFunc(std::move(kept), default_);
}

std::string PhiFunc::exceptions_string() const {
  std::string out = "{";
  bool first = true;
  for (auto [i, v] : exceptions_) {
    if (!first) out += ",";
    out += std::to_string(i) + ":" + std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string PhiFunc::str() const {
  auto s = exceptions_string();
  s.back() = '|';
  return s + std::to_string(default_) + "}";
}

bool operator==(const PhiFunc& a, const PhiFunc& b) {
  const auto na = a.normalized();
  const auto nb = b.normalized();
  return na.default_ == nb.default_ && na.exceptions_ == nb.exceptions_;
}

std::string to_string(const LPoint& p) {
  struct {
    std::string operator()(const ChainPt& c) const {
      return "(" + std::to_string(c.chain) + "," + std::to_string(c.height) + ")";
    }
    std::string operator()(const ChainTop& c) const { return "(" + std::to_string(c.chain) + ",inf)"; }
    std::string operator()(const PhiPt& f) const { return "(phi" + f.phi.str() + "," + std::to_string(f.level) + ")"; }
  } fmt;
  return std::visit(fmt, p);
}

bool is_point_of(const LPoint& p, Space s) {
  if (const auto* f = std::get_if<PhiPt>(&p)) {
    if (f->level != 0 && f->level != 1) return false;
    return s == Space::L || f->level == 0;
  }
  return true;
}

bool l_leq(const LPoint& a, const LPoint& b) {
  if (const auto* pa = std::get_if<ChainPt>(&a)) {
    if (const auto* pb = std::get_if<ChainPt>(&b)) return pa->chain == pb->chain && pa->height <= pb->height;
    if (const auto* tb = std::get_if<ChainTop>(&b)) return pa->chain == tb->chain;
    // (i,m) <= (i, φ(i)) <= (φ,·)
    const auto& fb = std::get<PhiPt>(b);
    return pa->height <= fb.phi(pa->chain);
  }
  if (const auto* ta = std::get_if<ChainTop>(&a)) {
    const auto* tb = std::get_if<ChainTop>(&b);
    return tb != nullptr && ta->chain == tb->chain;
  }
  const auto& fa = std::get<PhiPt>(a);
  const auto* fb = std::get_if<PhiPt>(&b);
  return fb != nullptr && fa.level <= fb->level && fa.phi == fb->phi;
}

bool is_maximal(const LPoint& p, Space s) {
  if (std::holds_alternative<ChainTop>(p)) return true;
  if (const auto* f = std::get_if<PhiPt>(&p)) return s == Space::LHat ? f->level == 0 : f->level == 1;
  return false;
}

std::optional<Nat> ThresholdRule::operator()(Nat i) const {
  auto it = exceptions_.find(i);
  return it == exceptions_.end() ? default_ : it->second;
}

bool ThresholdRule::all_finite() const {
  if (!default_) return false;
  for (const auto& [i, t] : exceptions_) {
    if (!t) return false;
  }
  return true;
}

namespace {

// Some chain i with φ(i) >= threshold(i). Indices outside both exception
// maps all behave like the defaults, and infinitely many of them exist.
bool forced_by_thresholds(const ThresholdRule& t, const PhiFunc& phi) {
  for (const auto& [i, th] : t.exceptions()) {
    if (th && phi(i) >= *th) return true;
  }
  for (const auto& [i, v] : phi.exceptions()) {
    const auto th = t(i);
    if (th && v >= *th) return true;
  }
  return t.default_value() && phi.default_value() >= *t.default_value();
}

bool cylinder_matches(const PhiCylinder& c, const PhiFunc& phi, int level) {
  if (!c.levels[static_cast<std::size_t>(level)]) return false;
  for (auto [coord, least] : c.conds) {
    if (phi(coord) < least) return false;
  }
  return true;
}

}  // namespace

bool symbolic_member(const SymbolicOpen& u, const LPoint& p) {
  if (const auto* c = std::get_if<ChainPt>(&p)) {
    const auto t = u.thresholds(c->chain);
    return t && c->height >= *t;
  }
  if (const auto* top = std::get_if<ChainTop>(&p)) return u.thresholds(top->chain).has_value();
  const auto& f = std::get<PhiPt>(p);
  if (forced_by_thresholds(u.thresholds, f.phi)) return true;
  if (f.level == 1 && u.all_phi_level1) return true;
  for (const auto& c : u.extra_phi) {
    if (cylinder_matches(c, f.phi, f.level)) return true;
  }
  return false;
}

std::optional<std::string> open_violation(const SymbolicOpen& u, Space s) {
  // (i,∞) is the supremum of C_i: a member top needs a member chain point.
  // With thresholds this holds by construction: the top is in exactly when
  // the threshold is a natural, and then (i, threshold) is in too.
  // Other directed suprema are attained, so upper closure is what remains.
  for (std::size_t n = 0; n < u.extra_phi.size(); ++n) {
    const auto& levels = u.extra_phi[n].levels;
    if (s == Space::LHat) {
      if (levels[1]) return "cylinder " + std::to_string(n) + " admits level 1, which L̂ lacks";
    } else if (levels[0] && !levels[1]) {
      return "cylinder " + std::to_string(n) + " admits (φ,0) but not (φ,1): not an upper set";
    }
  }
  if (s == Space::LHat && u.all_phi_level1) return "allPhiLevel1 refers to points outside L̂";
  return std::nullopt;
}

bool contains_max(const SymbolicOpen& u, Space s) {
  if (!u.thresholds.all_finite()) return false;
  return symbolic_member(u, PhiPt{PhiFunc{}, s == Space::L ? 1 : 0});
}

OpenFamily OpenFamily::finite(std::vector<SymbolicOpen> members) {
  OpenFamily f;
  f.members_ = std::move(members);
  f.description_ = "finite family of " + std::to_string(f.members_.size()) + " opens";
  return f;
}

OpenFamily OpenFamily::rule(Rule rule, Nat eval_bound, std::string description) {
  OpenFamily f;
  f.rule_ = std::move(rule);
  f.eval_bound_ = eval_bound;
  f.description_ = std::move(description);
  return f;
}

Nat OpenFamily::size() const { return rule_ ? eval_bound_ : members_.size(); }

SymbolicOpen OpenFamily::at(Nat j) const {
  if (j >= size()) throw Error(ErrorCode::InvalidSymbolicOpen, "family index " + std::to_string(j) + " out of range");
  return rule_ ? rule_(j) : members_[j];
}

DiagonalWitness diagonal_witness(const OpenFamily& family, std::span<const Nat> offsets) {
  const Nat m = family.size();
  std::vector<SymbolicOpen> opens;
  opens.reserve(m);
  std::map<Nat, Nat> exceptions;
  for (Nat j = 0; j < m; ++j) {
    opens.push_back(family.at(j));
    const auto& u = opens.back();
    if (auto why = open_violation(u, Space::L)) {
      throw Error(ErrorCode::InvalidSymbolicOpen, "member " + std::to_string(j) + ": " + *why);
    }
    if (!contains_max(u, Space::L)) {
      throw Error(ErrorCode::NotCoveringMax, "member " + std::to_string(j) + " does not contain Max(L)");
    }
    exceptions[j] = *u.thresholds(j) + (j < offsets.size() ? offsets[j] : 0);
  }
  DiagonalWitness out{PhiFunc(std::move(exceptions), 0), Report("diagonal witness")};
  const PhiPt low{out.phi, 0};
  const PhiPt high{out.phi, 1};

  bool on_chains = true;
  bool in_all = true;
  std::string chain_witness, member_witness;
  for (Nat j = 0; j < m; ++j) {
    if (on_chains && !symbolic_member(opens[j], ChainPt{j, out.phi(j)})) {
      on_chains = false;
      chain_witness = "φ(" + std::to_string(j) + ") outside U_" + std::to_string(j);
    }
    if (in_all && !symbolic_member(opens[j], low)) {
      in_all = false;
      member_witness = "(φ,0) outside U_" + std::to_string(j);
    }
  }

  Report& rep = out.certificate;
  rep.fact("family", family.description());
  rep.fact("φ exceptions", out.phi.exceptions_string());
  rep.fact("φ default", std::to_string(out.phi.default_value()));
  rep.verdict("φ(j) ∈ U_j ∩ C_j", on_chains, chain_witness);
  if (family.is_rule()) {
    rep.verdict("(φ,0) ∈ U_j for every evaluated j < " + std::to_string(m), in_all, member_witness);
  } else {
    rep.verdict("(φ,0) ∈ ⋂U_j", in_all, member_witness);
  }
  const bool strictly_below = l_leq(low, high) && !l_leq(high, low);
  rep.verdict("(φ,0) < (φ,1) in L", strictly_below);
  rep.fact("(φ,0) maximal in L", is_maximal(low, Space::L) || !strictly_below ? "YES" : "NO");
  rep.fact("⋂U_j = Max(L)", in_all && strictly_below ? "NO ((φ,0) is a non-maximal member)" : "UNDECIDED");
  return out;
}

SymbolicOpen lhat_open(Nat k) {
  std::map<Nat, std::optional<Nat>> exceptions;
  for (Nat i = 0; i <= k; ++i) exceptions[i] = k + 1;
  PhiCylinder every_phi;
  every_phi.levels = {true, false};
  return SymbolicOpen{ThresholdRule(Nat{0}, std::move(exceptions)), false, {every_phi}};
}

Report gdelta_certificate_lhat(Nat bound) {
  Report rep("L̂ G-delta certificate");
  const auto family = OpenFamily::rule(lhat_open, bound + 1, "U_k = L̂ minus ↓(i,k) for i <= k");
  rep.fact("family", family.description());
  rep.fact("bound", std::to_string(bound));

  std::vector<SymbolicOpen> opens;
  for (Nat k = 0; k <= bound; ++k) opens.push_back(family.at(k));

  std::string witness;
  for (Nat k = 0; k <= bound && witness.empty(); ++k) {
    if (auto why = open_violation(opens[k], Space::LHat)) witness = "U_" + std::to_string(k) + ": " + *why;
  }
  rep.verdict("U_k valid in L̂ for k <= " + std::to_string(bound), witness.empty(), witness);

  witness.clear();
  for (Nat k = 0; k <= bound && witness.empty(); ++k) {
    if (!contains_max(opens[k], Space::LHat)) witness = "U_" + std::to_string(k) + " misses a maximal point";
  }
  rep.verdict("U_k ⊇ Max(L̂) for k <= " + std::to_string(bound), witness.empty(), witness);

  witness.clear();
  for (Nat i = 0; i <= bound && witness.empty(); ++i) {
    for (Nat n = 0; n <= bound && witness.empty(); ++n) {
      const Nat k = std::max(i, n);
      if (symbolic_member(opens[k], ChainPt{i, n})) {
        witness = "(" + std::to_string(i) + "," + std::to_string(n) + ") ∈ U_" + std::to_string(k);
      }
    }
  }
  rep.verdict("(i,n) ∉ U_max(i,n) for i,n <= " + std::to_string(bound), witness.empty(), witness);

  witness.clear();
  for (Nat i = 0; i <= bound && witness.empty(); ++i) {
    for (Nat k = 0; k <= bound && witness.empty(); ++k) {
      if (!symbolic_member(opens[k], ChainTop{i})) {
        witness = "(" + std::to_string(i) + ",inf) ∉ U_" + std::to_string(k);
      }
    }
  }
  rep.verdict("(i,∞) ∈ U_k for i,k <= " + std::to_string(bound), witness.empty(), witness);

  // Smallest φ first; membership is monotone in φ so it speaks for all of F.
  witness.clear();
  const std::vector<PhiFunc> samples{PhiFunc{}, PhiFunc({{0, 3}, {2, 7}}, 1), PhiFunc({}, bound + 5)};
  for (Nat k = 0; k <= bound && witness.empty(); ++k) {
    for (const auto& phi : samples) {
      if (!symbolic_member(opens[k], PhiPt{phi, 0})) {
        witness = "(phi" + phi.str() + ",0) ∉ U_" + std::to_string(k);
        break;
      }
    }
  }
  rep.verdict("(φ,0) ∈ U_k for every φ and k <= " + std::to_string(bound), witness.empty(), witness);

  // U_k gives every chain i <= k the threshold k+1, so with k = max(i,n) we
  // get i <= k and n <= k < k+1: the rule excludes (i,n) for all i and n.
  witness.clear();
  for (Nat k = 0; k <= bound && witness.empty(); ++k) {
    const auto& t = opens[k].thresholds;
    if (t.default_value() != Nat{0} || t.exceptions().size() != k + 1) {
      witness = "U_" + std::to_string(k) + " has an unexpected threshold shape";
      break;
    }
    for (const auto& [i, th] : t.exceptions()) {
      if (i > k || th != k + 1) {
        witness = "U_" + std::to_string(k) + " threshold at chain " + std::to_string(i);
        break;
      }
    }
  }
  rep.verdict("rule: k = max(i,n) excludes (i,n) for all i,n", witness.empty(), witness);
  rep.fact("⋂U_k", "Max(L̂) = {(i,∞)} ∪ {(φ,0)}");
  return rep;
}

std::optional<std::size_t> Truncation::find(const LPoint& p) const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] == p) return i;
  }
  return std::nullopt;
}

Truncation truncate_L(Nat width, Nat depth, Space s, const TruncationLimits& limits) {
  if (width == 0 || depth == 0) throw Error(ErrorCode::InvalidModel, "truncation needs width and depth >= 1");
  const Nat levels = s == Space::L ? 2 : 1;
  Nat functions = 1;
  for (Nat i = 0; i < width; ++i) {
    functions *= depth;
    if (functions > limits.max_elements) break;
  }
  const Nat total = width * (depth + 1) + functions * levels;
  if (functions > limits.max_elements || total > limits.max_elements) {
    throw Error(ErrorCode::TooLarge, "truncation exceeds " + std::to_string(limits.max_elements) + " elements");
  }

  Truncation out;
  std::vector<std::string> labels;
  for (Nat i = 0; i < width; ++i) {
    for (Nat n = 0; n < depth; ++n) out.points.push_back(ChainPt{i, n});
    out.points.push_back(ChainTop{i});
  }
  for (const auto& p : out.points) labels.push_back(to_string(p));

  std::vector<Nat> digits(width, 0);
  for (Nat f = 0; f < functions; ++f) {
    std::map<Nat, Nat> ex;
    std::string name = "[";
    for (Nat i = 0; i < width; ++i) {
      ex[i] = digits[i];
      name += (i ? "," : "") + std::to_string(digits[i]);
    }
    name += "]";
    for (Nat level = 0; level < levels; ++level) {
      out.points.push_back(PhiPt{PhiFunc(ex, 0), static_cast<int>(level)});
      labels.push_back("(phi" + name + "," + std::to_string(level) + ")");
    }
    // Odometer with coordinate width-1 changing fastest.
    for (Nat i = width; i-- > 0;) {
      if (++digits[i] < depth) break;
      digits[i] = 0;
    }
  }

  const std::size_t n = out.points.size();
  FinitePoset::Relation leq(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (l_leq(out.points[a], out.points[b])) leq[a].set(b);
    }
  }
  out.poset = FinitePoset::from_relation(std::move(labels), std::move(leq));
  return out;
}

}  // namespace maxpoint
