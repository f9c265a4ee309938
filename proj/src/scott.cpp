#include "maxpoint/scott.hpp"

#include <string>

#include "masks.hpp"

namespace maxpoint {

namespace {

using detail::SmallPoset;

void require_enumerable(const FinitePoset& p, const EnumerationLimits& limits, const char* what) {
  if (p.size() > limits.max_elements || p.size() >= 63) {
    throw Error(ErrorCode::TooLarge, std::string(what) + " needs subset enumeration over " +
                                         std::to_string(p.size()) + " elements (bound " +
                                         std::to_string(limits.max_elements) + ")");
  }
}

bool use_exhaustive(const FinitePoset& p, const ScottOptions& opts) {
  switch (opts.path) {
    case CheckPath::Exhaustive: return true;
    case CheckPath::Shortcut: return false;
    case CheckPath::Auto: return p.size() <= opts.limits.max_elements && p.size() < 63;
  }
  return false;
}

struct MaskDirected {
  PointMask members;
  int sup;
};

std::vector<MaskDirected> enumerate_directed(const SmallPoset& p) {
  std::vector<MaskDirected> out;
  const PointMask end = PointMask{1} << p.n;
  for (PointMask d = 1; d < end; ++d) {
    if (detail::mask_directed(p, d)) out.push_back({d, detail::mask_sup(p, d)});
  }
  return out;
}

}  // namespace

std::vector<DirectedSubset> directed_subsets(const FinitePoset& p, const EnumerationLimits& limits) {
  require_enumerable(p, limits, "directed_subsets");
  const auto sp = detail::small_view(p);
  std::vector<DirectedSubset> out;
  for (const auto& d : enumerate_directed(sp)) {
    std::optional<std::size_t> sup;
    if (d.sup >= 0) sup = static_cast<std::size_t>(d.sup);
    out.push_back({p.set_of_bits(detail::to_bits(d.members, p.size())), sup});
  }
  return out;
}

bool is_inaccessible_by_directed_sups(const FinitePoset& p, const ElementSet& u,
                                      const EnumerationLimits& limits) {
  require_owned(p, u);
  require_enumerable(p, limits, "is_scott_open (exhaustive)");
  const auto sp = detail::small_view(p);
  const PointMask um = detail::to_mask(u.bits());
  for (const auto& d : enumerate_directed(sp)) {
    if (d.sup >= 0 && (um & point_bit(static_cast<std::size_t>(d.sup))) && (d.members & um) == 0) {
      return false;
    }
  }
  return true;
}

bool is_scott_open(const FinitePoset& p, const ElementSet& u, const ScottOptions& opts) {
  if (!is_upper_set(p, u)) return false;
  if (use_exhaustive(p, opts)) return is_inaccessible_by_directed_sups(p, u, opts.limits);
  // Finite directed sets contain their supremum, so clause (ii) holds.
  return true;
}

bool is_scott_closed(const FinitePoset& p, const ElementSet& c, const ScottOptions& opts) {
  require_owned(p, c);
  return is_scott_open(p, c.complement(), opts);
}

Topology scott_opens(const FinitePoset& p, const EnumerationLimits& limits) {
  require_enumerable(p, limits, "scott_opens");
  const auto sp = detail::small_view(p);
  std::vector<PointMask> opens;
  detail::for_each_upper_set(sp, [&](PointMask u) { opens.push_back(u); });
  return Topology(p.labels(), std::move(opens));
}

Topology relative_topology(const FinitePoset& p, const ElementSet& s, const EnumerationLimits& limits) {
  require_owned(p, s);
  const auto members = s.indices();
  if (members.size() > kMaxTopologyPoints) {
    throw Error(ErrorCode::TooLarge, "relative topology on more than 64 points");
  }
  std::vector<std::string> points;
  for (auto i : members) points.push_back(p.label(i));
  const Topology sigma = scott_opens(p, limits);
  std::vector<PointMask> opens;
  opens.reserve(sigma.opens().size());
  for (auto u : sigma.opens()) {
    PointMask r = 0;
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (u & point_bit(members[k])) r |= point_bit(k);
    }
    opens.push_back(r);
  }
  return Topology(std::move(points), std::move(opens));
}

std::vector<Bits> way_below_relation(const FinitePoset& p, const ScottOptions& opts) {
  const std::size_t n = p.size();
  std::vector<Bits> rows(n, Bits(n));
  if (!use_exhaustive(p, opts)) {
    for (std::size_t y = 0; y < n; ++y) rows[y] = p.below(y);
    return rows;
  }
  require_enumerable(p, opts.limits, "way_below (exhaustive)");
  const auto sp = detail::small_view(p);
  // x << y iff every directed D with y <= sup D has a member above x, i.e.
  // x lies in down(D). Intersect those down-closures per y.
  std::vector<PointMask> wb(n, sp.all());
  for (const auto& d : enumerate_directed(sp)) {
    if (d.sup < 0) continue;
    PointMask down_d = 0;
    detail::for_each_bit(d.members, [&](std::size_t i) { down_d |= sp.down[i]; });
    detail::for_each_bit(sp.down[static_cast<std::size_t>(d.sup)], [&](std::size_t y) { wb[y] &= down_d; });
  }
  for (std::size_t y = 0; y < n; ++y) rows[y] = detail::to_bits(wb[y], n);
  return rows;
}

bool way_below(const FinitePoset& p, std::size_t x, std::size_t y, const ScottOptions& opts) {
  if (x >= p.size() || y >= p.size()) throw Error(ErrorCode::UnknownLabel, "element index out of range");
  if (!use_exhaustive(p, opts)) return p.leq(x, y);
  require_enumerable(p, opts.limits, "way_below (exhaustive)");
  const auto sp = detail::small_view(p);
  for (const auto& d : enumerate_directed(sp)) {
    if (d.sup < 0 || !p.leq(y, static_cast<std::size_t>(d.sup))) continue;
    if ((d.members & sp.up[x]) == 0) return false;
  }
  return true;
}

ElementSet compact_elements(const FinitePoset& p, const ScottOptions& opts) {
  const auto wb = way_below_relation(p, opts);
  Bits k(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (wb[a].test(a)) k.set(a);
  }
  return p.set_of_bits(std::move(k));
}

namespace {

// Every x is the directed supremum of its approximants row[x].
bool approximated_by(const FinitePoset& p, const std::vector<Bits>& rows) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    const auto approx = p.set_of_bits(rows[x]);
    if (!is_directed(p, approx)) return false;
    const auto s = supremum(p, approx);
    if (!s || *s != x) return false;
  }
  return true;
}

}  // namespace

bool is_continuous(const FinitePoset& p, const ScottOptions& opts) {
  return approximated_by(p, way_below_relation(p, opts));
}

bool is_algebraic(const FinitePoset& p, const ScottOptions& opts) {
  const auto k = compact_elements(p, opts);
  std::vector<Bits> rows(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) rows[x] = p.below(x) & k.bits();
  return approximated_by(p, rows);
}

bool is_ideal_domain(const FinitePoset& p, const ScottOptions& opts) {
  if (!is_dcpo(p) || !is_continuous(p, opts)) return false;
  const auto covered = compact_elements(p, opts) | maximal_elements(p);
  return covered.size() == p.size();
}

bool is_bounded_complete(const FinitePoset& p) {
  if (p.empty()) return true;
  // The empty subset is bounded by everything: a bottom is required.
  bool has_bottom = false;
  for (std::size_t b = 0; b < p.size() && !has_bottom; ++b) has_bottom = p.above(b).all();
  if (!has_bottom) return false;
  // Given pairwise suprema of bounded pairs, any bounded finite set folds to
  // a supremum one member at a time.
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      const auto pair = p.set_of(std::vector<std::size_t>{a, b});
      if (upper_bounds(p, pair).empty()) continue;
      if (!supremum(p, pair)) return false;
    }
  }
  return true;
}

}  // namespace maxpoint
