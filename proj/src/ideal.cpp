#include "maxpoint/ideal.hpp"

#include <algorithm>

#include "masks.hpp"

namespace maxpoint {

std::string ideal_violation(const FinitePoset& base, const ElementSet& members) {
  require_owned(base, members);
  if (members.empty()) return "empty set";
  for (auto i : members.indices()) {
    if (!base.below(i).is_subset_of(members.bits())) {
      const auto j = (base.below(i) - members.bits()).find_first();
      return "not a lower set: " + base.label(j) + " <= " + base.label(i) + " is missing";
    }
  }
  const auto m = members.indices();
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      if (!(base.above(m[a]) & base.above(m[b])).intersects(members.bits())) {
        return "not directed: " + base.label(m[a]) + " and " + base.label(m[b]) +
               " have no upper bound inside the set";
      }
    }
  }
  return {};
}

Ideal Ideal::make(const FinitePoset& base, const ElementSet& members) {
  auto why = ideal_violation(base, members);
  if (!why.empty()) throw Error(ErrorCode::NotAnIdeal, format_set(base, members) + " is " + why);
  return Ideal(base, members);
}

std::vector<Ideal> all_ideals(const FinitePoset& q, const EnumerationLimits& limits) {
  if (q.size() > limits.max_elements || q.size() > 63) {
    throw Error(ErrorCode::TooLarge, "ideal enumeration over " + std::to_string(q.size()) +
                                         " elements (bound " + std::to_string(limits.max_elements) + ")");
  }
  const auto sp = detail::small_view(q);
  std::vector<PointMask> found;
  detail::for_each_lower_set(sp, [&](PointMask lower) {
    if (detail::mask_directed(sp, lower)) found.push_back(lower);
  });
  std::sort(found.begin(), found.end(), canonical_less);
  std::vector<Ideal> out;
  out.reserve(found.size());
  for (auto m : found) out.push_back(Ideal::make(q, q.set_of_bits(detail::to_bits(m, q.size()))));
  return out;
}

Ideal principal_ideal(const FinitePoset& q, std::size_t element) {
  if (element >= q.size()) throw Error(ErrorCode::UnknownLabel, "element index out of range");
  return Ideal::make(q, q.set_of_bits(q.below(element)));
}

Ideal principal_ideal(const FinitePoset& q, std::string_view label) {
  return principal_ideal(q, q.index_of(label));
}

IdealCompletion idl_poset(const FinitePoset& q, const EnumerationLimits& limits) {
  auto ideals = all_ideals(q, limits);
  const std::size_t n = ideals.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& i : ideals) labels.push_back(i.label());
  FinitePoset::Relation inclusion(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (ideals[a].members().bits().is_subset_of(ideals[b].members().bits())) inclusion[a].set(b);
    }
  }
  IdealCompletion out{FinitePoset::from_relation(std::move(labels), std::move(inclusion)), std::move(ideals), {}};
  out.principal.resize(q.size());
  for (std::size_t e = 0; e < q.size(); ++e) {
    const auto target = principal_ideal(q, e);
    auto it = std::find(out.ideals.begin(), out.ideals.end(), target);
    if (it == out.ideals.end()) {
      throw Error(ErrorCode::VerificationFailed, "principal ideal of " + q.label(e) + " not enumerated");
    }
    out.principal[e] = static_cast<std::size_t>(it - out.ideals.begin());
  }
  return out;
}

}  // namespace maxpoint
