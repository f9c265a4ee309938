#pragma once

#include <string>
#include <vector>

#include "maxpoint/poset.hpp"
#include "maxpoint/scott.hpp"

namespace maxpoint {

// A directed lower subset of its base poset.
class Ideal {
 public:
  // Throws NotAnIdeal naming the failed condition.
  static Ideal make(const FinitePoset& base, const ElementSet& members);

  const FinitePoset& base() const { return base_; }
  const ElementSet& members() const { return members_; }
  std::string label() const { return format_set(base_, members_); }

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.members_ == b.members_; }

 private:
  Ideal(FinitePoset base, ElementSet members) : base_(std::move(base)), members_(std::move(members)) {}

  FinitePoset base_;
  ElementSet members_;
};

// The reason `members` fails to be an ideal, or empty when it is one.
std::string ideal_violation(const FinitePoset& base, const ElementSet& members);

// Lower sets of q filtered by directedness, in canonical order (fewer
// members first, then by member list). Throws TooLarge beyond the bound.
std::vector<Ideal> all_ideals(const FinitePoset& q, const EnumerationLimits& limits = {});

Ideal principal_ideal(const FinitePoset& q, std::size_t element);
Ideal principal_ideal(const FinitePoset& q, std::string_view label);

// (Idl(q), ⊆) together with the embedding element -> principal ideal.
struct IdealCompletion {
  FinitePoset poset;
  std::vector<Ideal> ideals;            // aligned with poset indices
  std::vector<std::size_t> principal;   // q index -> poset index of ↓q
};

IdealCompletion idl_poset(const FinitePoset& q, const EnumerationLimits& limits = {});

}  // namespace maxpoint
