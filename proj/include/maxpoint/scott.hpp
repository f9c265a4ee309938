#pragma once

// Scott topology and the approximation relations on finite posets.
//
// Several checks come in two flavours. The exhaustive path quantifies over
// every directed subset exactly as the definitions read and is exponential;
// the shortcut path uses the finite-poset facts (a finite directed set owns
// its supremum, hence way-below coincides with <=). CheckPath::Auto takes the
// exhaustive path whenever the poset fits inside the enumeration bound.

#include <cstddef>
#include <vector>

#include "maxpoint/poset.hpp"
#include "maxpoint/topology.hpp"

namespace maxpoint {

struct EnumerationLimits {
  std::size_t max_elements = 20;
};

enum class CheckPath { Auto, Exhaustive, Shortcut };

struct ScottOptions {
  CheckPath path = CheckPath::Auto;
  EnumerationLimits limits{};
};

// Every directed subset of p, each paired with its supremum when it exists.
struct DirectedSubset {
  ElementSet members;
  std::optional<std::size_t> sup;
};
std::vector<DirectedSubset> directed_subsets(const FinitePoset& p, const EnumerationLimits& limits = {});

// Clause (ii) of Scott openness: a directed set whose supremum lies in u
// meets u. Always exhaustive; throws TooLarge beyond the bound.
bool is_inaccessible_by_directed_sups(const FinitePoset& p, const ElementSet& u,
                                      const EnumerationLimits& limits = {});

bool is_scott_open(const FinitePoset& p, const ElementSet& u, const ScottOptions& opts = {});
bool is_scott_closed(const FinitePoset& p, const ElementSet& c, const ScottOptions& opts = {});

// All Scott-open subsets of p as a topology over p's labels. Throws TooLarge
// when p has more elements than the bound.
Topology scott_opens(const FinitePoset& p, const EnumerationLimits& limits = {});

// {U ∩ s : U Scott open}; the points are the members of s in index order.
Topology relative_topology(const FinitePoset& p, const ElementSet& s, const EnumerationLimits& limits = {});

bool way_below(const FinitePoset& p, std::size_t x, std::size_t y, const ScottOptions& opts = {});

// Row y holds {x : x << y}.
std::vector<Bits> way_below_relation(const FinitePoset& p, const ScottOptions& opts = {});

ElementSet compact_elements(const FinitePoset& p, const ScottOptions& opts = {});

bool is_continuous(const FinitePoset& p, const ScottOptions& opts = {});
bool is_algebraic(const FinitePoset& p, const ScottOptions& opts = {});
// Domain in which every element is compact or maximal.
bool is_ideal_domain(const FinitePoset& p, const ScottOptions& opts = {});
// Every subset with an upper bound has a supremum (the empty set included).
bool is_bounded_complete(const FinitePoset& p);

}  // namespace maxpoint
