#include "oracles.hpp"

#include <bit>

namespace oracle {

namespace {

Mask full(const FinitePoset& p) { return p.size() == 64 ? ~Mask{0} : (Mask{1} << p.size()) - 1; }
bool has(Mask s, std::size_t i) { return (s >> i & 1) != 0; }

}  // namespace

bool upper(const FinitePoset& p, Mask s) {
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (has(s, a) && p.leq(a, b) && !has(s, b)) return false;
  return true;
}

bool lower(const FinitePoset& p, Mask s) {
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (has(s, b) && p.leq(a, b) && !has(s, a)) return false;
  return true;
}

bool directed(const FinitePoset& p, Mask s) {
  if (s == 0) return false;
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (!has(s, a)) continue;
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (!has(s, b)) continue;
      bool bound = false;
      for (std::size_t c = 0; c < p.size() && !bound; ++c) bound = has(s, c) && p.leq(a, c) && p.leq(b, c);
      if (!bound) return false;
    }
  }
  return true;
}

std::optional<std::size_t> sup(const FinitePoset& p, Mask s) {
  std::vector<std::size_t> ubs;
  for (std::size_t u = 0; u < p.size(); ++u) {
    bool ok = true;
    for (std::size_t a = 0; a < p.size() && ok; ++a) ok = !has(s, a) || p.leq(a, u);
    if (ok) ubs.push_back(u);
  }
  for (auto u : ubs) {
    bool least = true;
    for (auto w : ubs) least = least && p.leq(u, w);
    if (least) return u;
  }
  return std::nullopt;
}

std::vector<Mask> scott_opens(const FinitePoset& p) {
  std::vector<Mask> directed_sets;
  for (Mask d = 1; d <= full(p) && d != 0; ++d)
    if (directed(p, d)) directed_sets.push_back(d);
  std::vector<Mask> out;
  for (Mask u = 0;; ++u) {
    if (upper(p, u)) {
      bool inaccessible = true;
      for (auto d : directed_sets) {
        const auto s = sup(p, d);
        if (s && has(u, *s) && (d & u) == 0) inaccessible = false;
      }
      if (inaccessible) out.push_back(u);
    }
    if (u == full(p)) break;
  }
  return out;
}

bool way_below(const FinitePoset& p, std::size_t x, std::size_t y) {
  for (Mask d = 1; d <= full(p) && d != 0; ++d) {
    if (!directed(p, d)) continue;
    const auto s = sup(p, d);
    if (!s || !p.leq(y, *s)) continue;
    bool meets = false;
    for (std::size_t a = 0; a < p.size(); ++a) meets = meets || (has(d, a) && p.leq(x, a));
    if (!meets) return false;
  }
  return true;
}

bool bounded_complete(const FinitePoset& p) {
  for (Mask s = 0;; ++s) {
    bool bounded = false;
    for (std::size_t u = 0; u < p.size() && !bounded; ++u) {
      bool ok = true;
      for (std::size_t a = 0; a < p.size() && ok; ++a) ok = !has(s, a) || p.leq(a, u);
      bounded = ok;
    }
    if (bounded && !sup(p, s)) return false;
    if (s == full(p)) break;
  }
  return true;
}

std::vector<Mask> ideals(const FinitePoset& p) {
  std::vector<Mask> out;
  for (Mask s = 1; s <= full(p) && s != 0; ++s)
    if (lower(p, s) && directed(p, s)) out.push_back(s);
  return out;
}

std::vector<Triple> triples_discrete(const maxpoint::ProductModel& m) {
  const std::size_t nx = m.x_count();
  const std::size_t ny = m.y_count();
  const auto& p = m.poset();
  std::vector<Triple> out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    for (Mask u = 1; u < (Mask{1} << nx); ++u) {
      for (Mask v = 1; v < (Mask{1} << ny); ++v) {
        if (!has(v, m.y0())) continue;
        bool inside = true;
        for (std::size_t x = 0; x < nx && inside; ++x)
          for (std::size_t y = 0; y < ny && inside; ++y)
            if (has(u, x) && has(v, y)) inside = p.leq(k, m.element_at(x, y));
        if (inside) out.push_back({u, v, k});
      }
    }
  }
  return out;
}

}  // namespace oracle
