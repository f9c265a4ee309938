#include "maxpoint/factorization.hpp"

#include <algorithm>
#include <unordered_set>

#include "masks.hpp"

namespace maxpoint {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::size_t position_of(const std::vector<std::string>& labels, const std::string& label, const char* what) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw Error(ErrorCode::UnknownLabel, std::string("no ") + what + " labelled '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

void require_distinct(const std::vector<std::string>& labels, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw Error(ErrorCode::DuplicateLabel, std::string(what) + " label '" + l + "' repeated");
  }
}

PointMask rect_mask(PointMask u, PointMask v, std::size_t ny) {
  PointMask out = 0;
  detail::for_each_bit(u, [&](std::size_t x) {
    detail::for_each_bit(v, [&](std::size_t y) { out |= point_bit(x * ny + y); });
  });
  return out;
}

std::vector<std::string> grid_labels(const std::vector<std::string>& xs, const std::vector<std::string>& ys) {
  std::vector<std::string> out;
  for (const auto& x : xs) {
    for (const auto& y : ys) out.push_back("(" + x + "," + y + ")");
  }
  return out;
}

}  // namespace

FactorTopologies factor_topologies(const Topology& grid, const std::vector<std::string>& x_labels,
                                   const std::vector<std::string>& y_labels) {
  const std::size_t nx = x_labels.size();
  const std::size_t ny = y_labels.size();
  if (nx == 0 || ny == 0 || nx * ny != grid.point_count()) {
    throw Error(ErrorCode::InvalidModel, "grid topology does not have |X|·|Y| points");
  }
  const PointMask all_x = nx == 64 ? ~PointMask{0} : (PointMask{1} << nx) - 1;
  const PointMask all_y = ny == 64 ? ~PointMask{0} : (PointMask{1} << ny) - 1;
  std::vector<PointMask> xs, ys;
  for (auto w : grid.opens()) {
    // A cylinder U×Y is determined by its first row; likewise X×V by its first column.
    PointMask u = 0, v = 0;
    for (std::size_t x = 0; x < nx; ++x) {
      if (w & point_bit(x * ny)) u |= point_bit(x);
    }
    for (std::size_t y = 0; y < ny; ++y) {
      if (w & point_bit(y)) v |= point_bit(y);
    }
    if (rect_mask(u, all_y, ny) == w) xs.push_back(u);
    if (rect_mask(all_x, v, ny) == w) ys.push_back(v);
  }
  FactorTopologies out{Topology(x_labels, std::move(xs)), Topology(y_labels, std::move(ys))};
  for (auto u : out.x.opens()) {
    for (auto v : out.y.opens()) {
      if (!grid.is_open(rect_mask(u, v, ny))) {
        throw Error(ErrorCode::NotAProductTopology,
                    "rectangle " + grid.format(rect_mask(u, v, ny)) + " of factor opens is not open");
      }
    }
  }
  for (auto w : grid.opens()) {
    PointMask covered = 0;
    for (auto u : out.x.opens()) {
      for (auto v : out.y.opens()) {
        const PointMask r = rect_mask(u, v, ny);
        if ((r & ~w) == 0) covered |= r;
      }
    }
    if (covered != w) {
      throw Error(ErrorCode::NotAProductTopology, "open set " + grid.format(w) + " is not a union of open rectangles");
    }
  }
  return out;
}

ProductModel ProductModel::make(FinitePoset p, std::vector<std::string> x_labels, std::vector<std::string> y_labels,
                                const MaxLabeling& labeling, const std::string& y0, const ModelOptions& opts) {
  if (x_labels.empty() || y_labels.empty()) throw Error(ErrorCode::InvalidModel, "X and Y must be nonempty");
  require_distinct(x_labels, "X");
  require_distinct(y_labels, "Y");
  const std::size_t nx = x_labels.size();
  const std::size_t ny = y_labels.size();
  if (nx * ny > kMaxTopologyPoints) throw Error(ErrorCode::TooLarge, "X×Y has more than 64 points");

  const ScottOptions scott{CheckPath::Auto, opts.limits};
  ProductModel m(p, compact_elements(p, scott));
  m.x_labels_ = std::move(x_labels);
  m.y_labels_ = std::move(y_labels);
  m.y0_ = position_of(m.y_labels_, y0, "Y point");

  const auto max = maximal_elements(p);
  m.element_of_grid_.assign(nx * ny, npos);
  std::vector<std::size_t> grid_of_element(p.size(), npos);
  for (const auto& [element, pair] : labeling) {
    const std::size_t e = p.index_of(element);
    if (!max.contains(e)) throw Error(ErrorCode::InvalidModel, "'" + element + "' is labelled but not maximal");
    if (grid_of_element[e] != npos) throw Error(ErrorCode::DuplicateLabel, "'" + element + "' labelled twice");
    const std::size_t g = position_of(m.x_labels_, pair.first, "X point") * ny + position_of(m.y_labels_, pair.second, "Y point");
    if (m.element_of_grid_[g] != npos) {
      throw Error(ErrorCode::InvalidModel, "two maximal elements labelled (" + pair.first + "," + pair.second + ")");
    }
    m.element_of_grid_[g] = e;
    grid_of_element[e] = g;
  }
  for (std::size_t g = 0; g < nx * ny; ++g) {
    if (m.element_of_grid_[g] == npos) {
      throw Error(ErrorCode::InvalidModel, "no maximal element labelled (" + m.x_labels_[g / ny] + "," + m.y_labels_[g % ny] + ")");
    }
  }
  for (auto e : max.indices()) {
    if (grid_of_element[e] == npos) throw Error(ErrorCode::InvalidModel, "maximal element '" + p.label(e) + "' is unlabelled");
  }
  if (!is_algebraic(p, scott)) throw Error(ErrorCode::InvalidModel, "P is not algebraic");

  m.max_above_.assign(p.size(), 0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    for (auto e : (p.set_of_bits(p.above(k)) & max).indices()) m.max_above_[k] |= point_bit(grid_of_element[e]);
  }

  const auto relative = relative_topology(p, max, opts.limits);
  std::vector<std::size_t> to_grid;
  for (auto e : max.indices()) to_grid.push_back(grid_of_element[e]);
  m.grid_topology_ = transport(relative, to_grid, grid_labels(m.x_labels_, m.y_labels_));
  m.factors_ = factor_topologies(m.grid_topology_, m.x_labels_, m.y_labels_);
  return m;
}

PointMask ProductModel::rectangle(PointMask u, PointMask v) const { return rect_mask(u, v, y_count()); }

std::size_t ProductModel::x_index(const std::string& label) const { return position_of(x_labels_, label, "X point"); }
std::size_t ProductModel::y_index(const std::string& label) const { return position_of(y_labels_, label, "Y point"); }

ProductModel ProductModel::with_y0(const std::string& y0) const {
  ProductModel copy = *this;
  copy.y0_ = y_index(y0);
  return copy;
}

ProductModel discrete_product_model(const std::vector<std::string>& x_labels, const std::vector<std::string>& y_labels,
                                    const std::string& y0, const ModelOptions& opts) {
  std::vector<std::string> elements;
  MaxLabeling labeling;
  for (const auto& x : x_labels) {
    for (const auto& y : y_labels) {
      elements.push_back("(" + x + "," + y + ")");
      labeling.push_back({elements.back(), {x, y}});
    }
  }
  auto p = FinitePoset::build(std::move(elements), std::span<const LabelPair>{});
  return ProductModel::make(std::move(p), x_labels, y_labels, labeling, y0, opts);
}

ProductModel chain_under_pair_model(std::size_t n, std::span<const LabelPair> extra_covers, const ModelOptions& opts) {
  std::vector<std::string> elements;
  std::vector<LabelPair> covers;
  std::vector<std::string> xs;
  MaxLabeling labeling;
  for (std::size_t i = 0; i <= n; ++i) {
    const auto c = "c" + std::to_string(i);
    elements.push_back(c);
    covers.push_back({c, i < n ? "c" + std::to_string(i + 1) : std::string("inf")});
  }
  elements.push_back("inf");
  covers.push_back({"inf", "(0,1)"});
  for (std::size_t i = 0; i <= n; ++i) {
    xs.push_back(std::to_string(i));
    for (int b = 0; b < 2; ++b) {
      elements.push_back("(" + std::to_string(i) + "," + std::to_string(b) + ")");
      labeling.push_back({elements.back(), {xs.back(), std::to_string(b)}});
    }
  }
  covers.insert(covers.end(), extra_covers.begin(), extra_covers.end());
  auto p = FinitePoset::build(std::move(elements), covers);
  return ProductModel::make(std::move(p), std::move(xs), {"0", "1"}, labeling, "0", opts);
}

std::vector<QTriple> enumerate_triples(const ProductModel& m, const ModelOptions& opts) {
  std::vector<PointMask> us, vs;
  for (auto u : m.factors().x.opens()) {
    if (u != 0) us.push_back(u);
  }
  for (auto v : m.factors().y.opens()) {
    if (v & point_bit(m.y0())) vs.push_back(v);
  }
  const auto ks = m.compact().indices();
  if (ks.size() * us.size() * vs.size() > opts.max_triples) {
    throw Error(ErrorCode::TooLarge, "triple space has " + std::to_string(ks.size() * us.size() * vs.size()) +
                                         " candidates (bound " + std::to_string(opts.max_triples) + ")");
  }
  std::vector<QTriple> out;
  for (auto k : ks) {
    for (auto u : us) {
      for (auto v : vs) {
        if ((m.rectangle(u, v) & ~m.max_above(k)) == 0) out.push_back({u, v, k});
      }
    }
  }
  return out;
}

FinitePoset::Relation q_relation(const ProductModel& m, std::span<const QTriple> triples) {
  const std::size_t n = triples.size();
  FinitePoset::Relation rel(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a) {
    const PointMask rect = m.rectangle(triples[a].u, triples[a].v);
    for (std::size_t b = 0; b < n; ++b) {
      if (m.poset().leq(triples[a].k, triples[b].k) && (m.max_above(triples[b].k) & ~rect) == 0) rel[a].set(b);
    }
  }
  return rel;
}

std::string triple_label(const ProductModel& m, const QTriple& t) {
  return "(" + m.factors().x.format(t.u) + "," + m.factors().y.format(t.v) + "," + m.poset().label(t.k) + ")";
}

QPoset assemble_Q(const ProductModel& m, std::vector<QTriple> triples) {
  std::vector<std::string> labels;
  labels.reserve(triples.size());
  for (const auto& t : triples) {
    const bool shape_ok = t.u != 0 && m.factors().x.is_open(t.u) && m.factors().y.is_open(t.v) &&
                          (t.v & point_bit(m.y0())) != 0 && t.k < m.poset().size() && m.compact().contains(t.k);
    if (!shape_ok || (m.rectangle(t.u, t.v) & ~m.max_above(t.k)) != 0) {
      throw Error(ErrorCode::InvalidModel, "triple " + triple_label(m, t) + " does not qualify");
    }
    labels.push_back(triple_label(m, t));
  }
  auto rel = q_relation(m, triples);
  return QPoset{FinitePoset::from_relation(std::move(labels), std::move(rel)), std::move(triples)};
}

QPoset build_Q(const ProductModel& m, const ModelOptions& opts) { return assemble_Q(m, enumerate_triples(m, opts)); }

ElementSet j_members(const ProductModel&, const QPoset& q, std::size_t x) {
  Bits b(q.triples.size());
  for (std::size_t i = 0; i < q.triples.size(); ++i) {
    if (q.triples[i].u & point_bit(x)) b.set(i);
  }
  return q.order.set_of_bits(std::move(b));
}

Ideal ideal_J(const ProductModel& m, const QPoset& q, std::size_t x) {
  if (x >= m.x_count()) throw Error(ErrorCode::UnknownLabel, "X index out of range");
  const auto members = j_members(m, q, x);
  const auto why = ideal_violation(q.order, members);
  if (!why.empty()) throw Error(ErrorCode::NotAnIdeal, "J(" + m.x_labels()[x] + ") is " + why);
  return Ideal::make(q.order, members);
}

PointMask rectangle_meet(const ProductModel& m, const QPoset& q, const ElementSet& ideal) {
  PointMask w = m.grid_topology().whole();
  for (auto i : ideal.indices()) w &= m.rectangle(q.triples[i].u, q.triples[i].v);
  return w;
}

PointMask upper_max_meet(const ProductModel& m, const QPoset& q, const ElementSet& ideal) {
  PointMask w = m.grid_topology().whole();
  for (auto i : ideal.indices()) w &= m.max_above(q.triples[i].k);
  return w;
}

PointMask open_meet_of_J(const ProductModel& m, const QPoset& q, std::size_t x) {
  PointMask w = m.factors().x.whole();
  for (auto i : j_members(m, q, x).indices()) w &= q.triples[i].u;
  return w;
}

namespace {

// Order axioms on a raw relation, first violation as a witness string.
std::string order_axiom_violation(const FinitePoset::Relation& rel, const std::vector<std::string>& labels) {
  const std::size_t n = rel.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!rel[a].test(a)) return "not reflexive at " + labels[a];
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && rel[a].test(b) && rel[b].test(a)) return "not antisymmetric: " + labels[a] + ", " + labels[b];
      if (!rel[a].test(b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (rel[b].test(c) && !rel[a].test(c)) {
          return "not transitive: " + labels[a] + " ⊑ " + labels[b] + " ⊑ " + labels[c];
        }
      }
    }
  }
  return {};
}

}  // namespace

FactorResult verify_factorization(const ProductModel& m, QPoset q, const ModelOptions& opts) {
  FactorResult r{std::move(q), {}, {}, {}, {}, Report("factor model")};
  Report& rep = r.report;
  const std::size_t nx = m.x_count();
  const auto& tx = m.factors().x;
  rep.fact("|X|", std::to_string(nx));
  rep.fact("|Y|", std::to_string(m.y_count()));
  rep.fact("y0", m.y0_label());
  rep.fact("|Q|", std::to_string(r.q.triples.size()));

  {
    const auto rel = q_relation(m, r.q.triples);
    auto why = order_axiom_violation(rel, r.q.order.labels());
    if (why.empty()) {
      for (std::size_t a = 0; a < rel.size() && why.empty(); ++a) {
        if (rel[a] != r.q.order.above(a)) why = "stored order differs from ⊑ at " + r.q.order.label(a);
      }
    }
    rep.verdict("claim 1 (⊑ is a partial order on Q)", why.empty(), why);
  }

  r.px = idl_poset(r.q.order, opts.limits);
  const auto& px = r.px.poset;
  rep.fact("|P_X|", std::to_string(px.size()));
  const ScottOptions scott{CheckPath::Auto, opts.limits};
  rep.verdict("P_X algebraic", is_algebraic(px, scott));
  rep.verdict("K(P_X) = principal ideals", compact_elements(px, scott) == px.set_of(r.px.principal));

  std::vector<std::size_t> j_index(nx, npos);
  {
    std::string witness;
    for (std::size_t x = 0; x < nx; ++x) {
      const auto members = j_members(m, r.q, x);
      const auto why = ideal_violation(r.q.order, members);
      if (!why.empty()) {
        if (witness.empty()) witness = "J(" + m.x_labels()[x] + ") is " + why;
        continue;
      }
      for (std::size_t i = 0; i < r.px.ideals.size(); ++i) {
        if (r.px.ideals[i].members() == members) j_index[x] = i;
      }
      if (j_index[x] == npos && witness.empty()) witness = "J(" + m.x_labels()[x] + ") missing from Idl(Q)";
    }
    rep.verdict("claim 2 (every J(x) is an ideal of Q)", witness.empty(), witness);
  }

  const auto max_px = maximal_elements(px);
  {
    std::string witness;
    for (auto i : max_px.indices()) {
      if (std::find(j_index.begin(), j_index.end(), i) == j_index.end()) {
        witness = "maximal ideal " + px.label(i) + " is no J(x)";
        break;
      }
    }
    rep.verdict("claim 3 (Max(P_X) ⊆ {J(x) : x ∈ X})", witness.empty(), witness);
  }
  {
    std::string witness;
    for (std::size_t x = 0; x < nx && witness.empty(); ++x) {
      if (j_index[x] == npos) witness = "J(" + m.x_labels()[x] + ") is not an element of P_X";
      else if (!max_px.contains(j_index[x])) witness = "J(" + m.x_labels()[x] + ") is not maximal";
    }
    rep.verdict("claim 4 (Max(P_X) = {J(x) : x ∈ X})", witness.empty(), witness);
  }

  r.f = j_index;
  bool bijective = max_px.size() == nx;
  {
    std::string witness;
    for (std::size_t a = 0; a < nx && witness.empty(); ++a) {
      if (j_index[a] == npos || !max_px.contains(j_index[a])) {
        witness = "f(" + m.x_labels()[a] + ") is not a maximal point";
      }
      for (std::size_t b = a + 1; b < nx && witness.empty(); ++b) {
        if (j_index[a] == j_index[b]) witness = "f(" + m.x_labels()[a] + ") = f(" + m.x_labels()[b] + ")";
      }
    }
    if (witness.empty() && !bijective) witness = "|Max(P_X)| = " + std::to_string(max_px.size()) + " but |X| = " + std::to_string(nx);
    bijective = witness.empty();
    rep.verdict("f bijective onto Max(P_X)", bijective, witness);
  }
  rep.fact("|Max(P_X)|", std::to_string(max_px.size()));

  r.max_space = relative_topology(px, max_px, opts.limits);
  if (bijective) {
    const auto max_list = max_px.indices();
    r.f_point.assign(nx, npos);
    for (std::size_t x = 0; x < nx; ++x) {
      r.f_point[x] = static_cast<std::size_t>(std::find(max_list.begin(), max_list.end(), j_index[x]) - max_list.begin());
    }
    std::string witness;
    for (auto w : r.max_space.opens()) {
      PointMask pre = 0;
      for (std::size_t x = 0; x < nx; ++x) {
        if (w & point_bit(r.f_point[x])) pre |= point_bit(x);
      }
      if (!tx.is_open(pre)) {
        witness = "preimage of " + r.max_space.format(w) + " is " + tx.format(pre);
        break;
      }
    }
    rep.verdict("claim 5 (f continuous)", witness.empty(), witness);
    witness.clear();
    for (auto u : tx.opens()) {
      const PointMask image = map_mask(u, r.f_point);
      if (!r.max_space.is_open(image)) {
        witness = "image of " + tx.format(u) + " is " + r.max_space.format(image);
        break;
      }
    }
    rep.verdict("claim 6 (f open)", witness.empty(), witness);
  } else {
    rep.skipped("claim 5 (f continuous)", "f is not a bijection");
    rep.skipped("claim 6 (f open)", "f is not a bijection");
  }

  {
    std::string witness;
    for (auto i : max_px.indices()) {
      const auto& ideal = r.px.ideals[i].members();
      const PointMask w1 = rectangle_meet(m, r.q, ideal);
      const PointMask w2 = upper_max_meet(m, r.q, ideal);
      if (w1 != w2) {
        witness = "ideal " + px.label(i) + ": " + m.grid_topology().format(w1) + " vs " + m.grid_topology().format(w2);
        break;
      }
    }
    rep.verdict("W1 = W2 for every maximal ideal", witness.empty(), witness);
  }
  {
    std::string witness;
    for (std::size_t x = 0; x < nx; ++x) {
      const PointMask meet = open_meet_of_J(m, r.q, x);
      if (meet != point_bit(x)) {
        witness = "x = " + m.x_labels()[x] + " gives " + tx.format(meet);
        break;
      }
    }
    rep.verdict("T1 law (⋂{U : (U,V,k) ∈ J(x)} = {x})", witness.empty(), witness);
  }
  return r;
}

FactorResult factor_model(const ProductModel& m, const ModelOptions& opts) {
  QPoset q;
  try {
    q = build_Q(m, opts);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotAPartialOrder || e.code() == ErrorCode::CycleDetected) {
      throw Error(ErrorCode::VerificationFailed, std::string("claim 1 (⊑ is a partial order on Q): ") + e.what());
    }
    throw;
  }
  auto r = verify_factorization(m, std::move(q), opts);
  if (const auto* bad = r.report.first_failure()) {
    throw Error(ErrorCode::VerificationFailed, bad->key + ": " + bad->value);
  }
  return r;
}

LowerSetModel lower_set_model(const ProductModel& m, const std::string& y_label, const ModelOptions& opts) {
  const auto& p = m.poset();
  const std::size_t y = m.y_index(y_label);
  const ScottOptions scott{CheckPath::Auto, opts.limits};

  std::vector<std::size_t> slice_elems;
  PointMask slice_grid = 0;
  for (std::size_t x = 0; x < m.x_count(); ++x) {
    slice_elems.push_back(m.element_at(x, y));
    slice_grid |= point_bit(m.grid(x, y));
  }
  const auto slice = p.set_of(slice_elems);
  const auto lower = down_set(p, slice);

  LowerSetModel out{induced_subposet(p, lower), false, false, false, false, false, Report("lower set model")};
  out.scott_closed = is_scott_closed(p, lower, scott);
  out.slice_closed = m.grid_topology().is_open(m.grid_topology().whole() & ~slice_grid);
  out.ambient_ideal_domain = is_ideal_domain(p, scott);

  const auto& sub = out.lower.poset;
  const auto sub_max = maximal_elements(sub);
  {
    Bits expect(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i) {
      if (slice.contains(out.lower.to_parent[i])) expect.set(i);
    }
    out.max_is_slice = sub_max.bits() == expect;
  }
  if (out.max_is_slice) {
    // Max(sub) point order follows sub indices; carry each point to its x.
    const auto rel = relative_topology(sub, sub_max, opts.limits);
    std::vector<std::size_t> to_x;
    for (auto i : sub_max.indices()) {
      const auto parent = out.lower.to_parent[i];
      for (std::size_t x = 0; x < m.x_count(); ++x) {
        if (m.element_at(x, y) == parent) to_x.push_back(x);
      }
    }
    out.homeomorphic = transport(rel, to_x, m.x_labels()) == m.factors().x;
  }

  Report& rep = out.report;
  rep.fact("y", y_label);
  rep.fact("|↓(X×{y})|", std::to_string(sub.size()));
  rep.fact("↓(X×{y})", format_set(p, lower));
  rep.fact("X×{y} closed in Max(P)", yes_no(out.slice_closed));
  rep.fact("↓(X×{y}) Scott closed in P", yes_no(out.scott_closed));
  rep.fact("P ideal domain", yes_no(out.ambient_ideal_domain));
  if (out.ambient_ideal_domain && out.slice_closed) {
    const bool sub_ideal = is_ideal_domain(sub, scott);
    rep.verdict("lower closure lemma (↓X' Scott closed and an ideal domain)", out.scott_closed && sub_ideal,
                out.scott_closed ? "↓X' is not an ideal domain" : "↓X' is not Scott closed");
  } else {
    rep.fact("lower closure lemma (↓X' Scott closed and an ideal domain)", "N/A (hypotheses fail)");
  }
  rep.fact("↓(X×{y}) dcpo", yes_no(is_dcpo(sub)));
  rep.fact("↓(X×{y}) domain", yes_no(is_continuous(sub, scott)));
  rep.fact("↓(X×{y}) ideal domain", yes_no(is_ideal_domain(sub, scott)));
  rep.fact("Max(↓(X×{y})) = X×{y}", yes_no(out.max_is_slice));
  rep.fact("Max(↓(X×{y})) ≅ X", yes_no(out.homeomorphic));
  if (out.scott_closed) {
    rep.verdict("Scott closed slice models X", out.homeomorphic, "Max of the slice is not homeomorphic to X");
  }
  return out;
}

LowerClosureFinding lower_closure_check(const FinitePoset& p, const ElementSet& x_prime, const EnumerationLimits& limits) {
  require_owned(p, x_prime);
  const ScottOptions scott{CheckPath::Auto, limits};
  const auto max = maximal_elements(p);
  if (!x_prime.is_subset_of(max)) throw Error(ErrorCode::InvalidModel, "X' must consist of maximal elements");

  LowerClosureFinding out;
  const auto rel = relative_topology(p, max, limits);
  const auto max_list = max.indices();
  PointMask rest = 0;
  for (std::size_t k = 0; k < max_list.size(); ++k) {
    if (!x_prime.contains(max_list[k])) rest |= point_bit(k);
  }
  out.hypotheses = is_ideal_domain(p, scott) && rel.is_open(rest);
  const auto lower = down_set(p, x_prime);
  out.scott_closed = is_scott_closed(p, lower, scott);
  out.ideal_domain = is_ideal_domain(induced_subposet(p, lower).poset, scott);
  return out;
}

AlgebraicModel algebraic_model(const FinitePoset& p, const EnumerationLimits& limits) {
  AlgebraicModel out{idl_poset(p, limits), Report("algebraic model")};
  const auto& idl = out.completion.poset;
  const ScottOptions scott{CheckPath::Auto, limits};
  Report& rep = out.report;
  rep.fact("|P|", std::to_string(p.size()));
  rep.fact("|Idl(P)|", std::to_string(idl.size()));
  rep.verdict("Idl(P) algebraic", is_algebraic(idl, scott));
  rep.verdict("K(Idl(P)) = principal ideals", compact_elements(idl, scott) == idl.set_of(out.completion.principal));

  const auto max_p = maximal_elements(p);
  const auto max_i = maximal_elements(idl);
  Bits image(idl.size());
  for (auto e : max_p.indices()) image.set(out.completion.principal[e]);
  const bool onto = image == max_i.bits();
  rep.verdict("↓ maps Max(P) onto Max(Idl(P))", onto);
  if (onto) {
    const auto tp = relative_topology(p, max_p, limits);
    const auto ti = relative_topology(idl, max_i, limits);
    const auto max_i_list = max_i.indices();
    std::vector<std::size_t> point_map;
    for (auto e : max_p.indices()) {
      const auto target = out.completion.principal[e];
      point_map.push_back(static_cast<std::size_t>(std::find(max_i_list.begin(), max_i_list.end(), target) - max_i_list.begin()));
    }
    rep.verdict("Max(P) ≅ Max(Idl(P))", transport(tp, point_map, ti.points()) == ti);
  } else {
    rep.skipped("Max(P) ≅ Max(Idl(P))", "maximal points do not correspond");
  }
  return out;
}

}  // namespace maxpoint
