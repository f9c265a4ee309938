#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace maxpoint {

// Subset of a topology's points, bit i standing for point i.
using PointMask = std::uint64_t;
inline constexpr std::size_t kMaxTopologyPoints = 64;

inline PointMask point_bit(std::size_t i) { return PointMask{1} << i; }

// Canonical order on subsets: fewer members first, then lexicographic on the
// ascending member list.
bool canonical_less(PointMask a, PointMask b);

// A finite family of open sets over named points. The family is stored
// sorted in canonical order without duplicates; construction does not check
// the topology axioms (see violation()).
class Topology {
 public:
  Topology() = default;
  // Throws TooLarge beyond kMaxTopologyPoints, InvalidModel for masks that
  // mention nonexistent points.
  Topology(std::vector<std::string> points, std::vector<PointMask> opens);

  static Topology discrete(std::vector<std::string> points);
  static Topology indiscrete(std::vector<std::string> points);

  const std::vector<std::string>& points() const { return points_; }
  std::size_t point_count() const { return points_.size(); }
  const std::vector<PointMask>& opens() const { return opens_; }
  PointMask whole() const;

  bool is_open(PointMask s) const;

  // First failed axiom ("missing empty set", "not closed under union: ..."),
  // or nullopt for a genuine topology.
  std::optional<std::string> violation() const;
  bool is_topology() const { return !violation().has_value(); }

  bool is_t1() const;
  bool is_discrete() const;

  // Smallest open set containing s (the whole space when s is not covered).
  PointMask open_hull(PointMask s) const;

  std::string format(PointMask s) const;
  std::optional<std::size_t> find_point(const std::string& label) const;

  friend bool operator==(const Topology& a, const Topology& b) {
    return a.points_ == b.points_ && a.opens_ == b.opens_;
  }

 private:
  std::vector<std::string> points_;
  std::vector<PointMask> opens_;
};

// Finite topologies are closed under countable intersections, so S is a
// G-delta set iff it equals the intersection of its open supersets.
bool is_gdelta(const Topology& t, PointMask s);

// Image of `t` under the bijection point i -> point_map[i] onto `points`.
Topology transport(const Topology& t, std::span<const std::size_t> point_map,
                   std::vector<std::string> points);

PointMask map_mask(PointMask s, std::span<const std::size_t> point_map);

}  // namespace maxpoint
