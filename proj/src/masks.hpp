#pragma once

// Word-sized views of small posets for the enumeration-heavy paths.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "maxpoint/poset.hpp"
#include "maxpoint/topology.hpp"

namespace maxpoint::detail {

struct SmallPoset {
  std::size_t n = 0;
  std::vector<PointMask> up;
  std::vector<PointMask> down;

  PointMask all() const { return n == 64 ? ~PointMask{0} : (PointMask{1} << n) - 1; }
};

inline PointMask to_mask(const Bits& b) {
  PointMask m = 0;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) m |= point_bit(i);
  return m;
}

inline Bits to_bits(PointMask m, std::size_t n) {
  Bits b(n);
  for (; m != 0; m &= m - 1) b.set(static_cast<std::size_t>(std::countr_zero(m)));
  return b;
}

// Caller guarantees p.size() <= 64.
inline SmallPoset small_view(const FinitePoset& p) {
  SmallPoset s;
  s.n = p.size();
  s.up.resize(s.n);
  s.down.resize(s.n);
  for (std::size_t i = 0; i < s.n; ++i) {
    s.up[i] = to_mask(p.above(i));
    s.down[i] = to_mask(p.below(i));
  }
  return s;
}

template <typename F>
inline void for_each_bit(PointMask m, F&& f) {
  for (; m != 0; m &= m - 1) f(static_cast<std::size_t>(std::countr_zero(m)));
}

inline bool mask_directed(const SmallPoset& p, PointMask d) {
  if (d == 0) return false;
  for (PointMask a = d; a != 0; a &= a - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(a));
    for (PointMask b = a & (a - 1); b != 0; b &= b - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(b));
      if ((p.up[i] & p.up[j] & d) == 0) return false;
    }
  }
  return true;
}

inline bool mask_lower(const SmallPoset& p, PointMask s) {
  for (PointMask a = s; a != 0; a &= a - 1) {
    if ((p.down[static_cast<std::size_t>(std::countr_zero(a))] & ~s) != 0) return false;
  }
  return true;
}

inline bool mask_upper(const SmallPoset& p, PointMask s) {
  for (PointMask a = s; a != 0; a &= a - 1) {
    if ((p.up[static_cast<std::size_t>(std::countr_zero(a))] & ~s) != 0) return false;
  }
  return true;
}

// Least upper bound of d, or -1.
inline int mask_sup(const SmallPoset& p, PointMask d) {
  PointMask ub = p.all();
  for_each_bit(d, [&](std::size_t i) { ub &= p.up[i]; });
  for (PointMask a = ub; a != 0; a &= a - 1) {
    const int u = std::countr_zero(a);
    if ((ub & ~p.up[static_cast<std::size_t>(u)]) == 0) return u;
  }
  return -1;
}

// Lower sets enumerated by deciding elements bottom-up: an element may join
// only once everything strictly below it has.
template <typename F>
void for_each_lower_set(const SmallPoset& p, F&& visit) {
  std::vector<std::size_t> order(p.n);
  for (std::size_t i = 0; i < p.n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::popcount(p.down[a]) < std::popcount(p.down[b]);
  });
  auto rec = [&](auto&& self, std::size_t k, PointMask cur) -> void {
    if (k == order.size()) {
      visit(cur);
      return;
    }
    const std::size_t e = order[k];
    self(self, k + 1, cur);
    if ((p.down[e] & ~point_bit(e) & ~cur) == 0) self(self, k + 1, cur | point_bit(e));
  };
  rec(rec, 0, 0);
}

// Upper sets are complements of lower sets.
template <typename F>
void for_each_upper_set(const SmallPoset& p, F&& visit) {
  for_each_lower_set(p, [&](PointMask lower) { visit(p.all() & ~lower); });
}

}  // namespace maxpoint::detail
