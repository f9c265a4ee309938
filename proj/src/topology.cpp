#include "maxpoint/topology.hpp"

#include <algorithm>
#include <bit>

#include "maxpoint/error.hpp"

namespace maxpoint {

bool canonical_less(PointMask a, PointMask b) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  const PointMask diff = a ^ b;
  if (diff == 0) return false;
  // Member lists agree below the lowest differing bit; whoever owns that bit
  // has the smaller next member.
  return (a & (diff & -diff)) != 0;
}

Topology::Topology(std::vector<std::string> points, std::vector<PointMask> opens)
    : points_(std::move(points)), opens_(std::move(opens)) {
  if (points_.size() > kMaxTopologyPoints) {
    throw Error(ErrorCode::TooLarge, "topologies are limited to 64 points, got " +
                                         std::to_string(points_.size()));
  }
  const PointMask all = whole();
  for (auto m : opens_) {
    if ((m & ~all) != 0) throw Error(ErrorCode::InvalidModel, "open set mentions a nonexistent point");
  }
  std::sort(opens_.begin(), opens_.end(), canonical_less);
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
}

Topology Topology::discrete(std::vector<std::string> points) {
  if (points.size() > 20) throw Error(ErrorCode::TooLarge, "discrete topology on more than 20 points");
  std::vector<PointMask> opens;
  const PointMask n = PointMask{1} << points.size();
  opens.reserve(n);
  for (PointMask m = 0; m < n; ++m) opens.push_back(m);
  return Topology(std::move(points), std::move(opens));
}

Topology Topology::indiscrete(std::vector<std::string> points) {
  Topology t;
  t.points_ = std::move(points);
  t.opens_ = {0};
  if (t.whole() != 0) t.opens_.push_back(t.whole());
  return t;
}

PointMask Topology::whole() const {
  return points_.size() == 64 ? ~PointMask{0} : (PointMask{1} << points_.size()) - 1;
}

bool Topology::is_open(PointMask s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s, canonical_less);
}

std::optional<std::string> Topology::violation() const {
  if (!is_open(0)) return "missing the empty set";
  if (!is_open(whole())) return "missing the whole space";
  for (std::size_t a = 0; a < opens_.size(); ++a) {
    for (std::size_t b = a + 1; b < opens_.size(); ++b) {
      if (!is_open(opens_[a] | opens_[b])) {
        return "not closed under union: " + format(opens_[a]) + " and " + format(opens_[b]);
      }
      if (!is_open(opens_[a] & opens_[b])) {
        return "not closed under intersection: " + format(opens_[a]) + " and " + format(opens_[b]);
      }
    }
  }
  return std::nullopt;
}

PointMask Topology::open_hull(PointMask s) const {
  PointMask hull = whole();
  for (auto m : opens_) {
    if ((s & ~m) == 0) hull &= m;
  }
  return hull;
}

bool Topology::is_t1() const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (open_hull(point_bit(i)) != point_bit(i)) return false;
  }
  return true;
}

bool Topology::is_discrete() const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!is_open(point_bit(i))) return false;
  }
  return true;
}

std::string Topology::format(PointMask s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if ((s & point_bit(i)) == 0) continue;
    if (!first) out += ",";
    out += points_[i];
    first = false;
  }
  return out + "}";
}

std::optional<std::size_t> Topology::find_point(const std::string& label) const {
  auto it = std::find(points_.begin(), points_.end(), label);
  if (it == points_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

bool is_gdelta(const Topology& t, PointMask s) { return t.open_hull(s) == s; }

PointMask map_mask(PointMask s, std::span<const std::size_t> point_map) {
  PointMask out = 0;
  for (std::size_t i = 0; i < point_map.size(); ++i) {
    if (s & point_bit(i)) out |= point_bit(point_map[i]);
  }
  return out;
}

Topology transport(const Topology& t, std::span<const std::size_t> point_map,
                   std::vector<std::string> points) {
  if (point_map.size() != t.point_count() || points.size() != t.point_count()) {
    throw Error(ErrorCode::InvalidModel, "transport needs a bijection between equal-sized spaces");
  }
  std::vector<PointMask> opens;
  opens.reserve(t.opens().size());
  for (auto m : t.opens()) opens.push_back(map_mask(m, point_map));
  return Topology(std::move(points), std::move(opens));
}

}  // namespace maxpoint
