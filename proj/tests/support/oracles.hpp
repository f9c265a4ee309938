#pragma once

// Brute-force reference implementations used to cross-check the library.
// They read only the closed relation (leq) and enumerate subsets directly.

#include <cstdint>
#include <optional>
#include <vector>

#include "maxpoint/factorization.hpp"
#include "maxpoint/poset.hpp"

namespace oracle {

using maxpoint::FinitePoset;
using Mask = std::uint64_t;

bool upper(const FinitePoset& p, Mask s);
bool lower(const FinitePoset& p, Mask s);
bool directed(const FinitePoset& p, Mask s);
std::optional<std::size_t> sup(const FinitePoset& p, Mask s);

// Subsets satisfying both Scott clauses, checked over every subset D.
std::vector<Mask> scott_opens(const FinitePoset& p);

// x << y by quantifying over every directed subset.
bool way_below(const FinitePoset& p, std::size_t x, std::size_t y);

// Every subset with an upper bound has a least one (the empty set included).
bool bounded_complete(const FinitePoset& p);

std::vector<Mask> ideals(const FinitePoset& p);

struct Triple {
  Mask u = 0;
  Mask v = 0;
  std::size_t k = 0;
};

// Qualifying triples over discrete factor topologies: every nonempty U ⊆ X,
// every V ∋ y0, every k, with U×V ⊆ ↑k ∩ Max(P) checked element by element.
std::vector<Triple> triples_discrete(const maxpoint::ProductModel& m);

}  // namespace oracle
