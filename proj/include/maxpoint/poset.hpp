#pragma once

// Finite posets stored as a fully closed order relation.
//
// A FinitePoset is an immutable handle: copies share one representation and
// compare equal by identity. ElementSets remember the poset they were cut
// from and every operation rejects sets that belong to another poset.

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "maxpoint/error.hpp"

namespace maxpoint {

using Bits = boost::dynamic_bitset<>;
using LabelPair = std::pair<std::string, std::string>;

class ElementSet;

class FinitePoset {
 public:
  // Row i holds {j : i <= j}.
  using Relation = std::vector<Bits>;

  // Empty poset.
  FinitePoset();

  // Reflexive-transitive closure of `covers`. Throws DuplicateLabel,
  // UnknownLabel, or CycleDetected when the closure is not antisymmetric.
  static FinitePoset build(std::vector<std::string> labels, std::span<const LabelPair> covers);
  static FinitePoset build(std::vector<std::string> labels, std::initializer_list<LabelPair> covers) {
    return build(std::move(labels), std::span<const LabelPair>(covers.begin(), covers.size()));
  }

  // Takes `leq` as the complete order relation without closing it. Each
  // order axiom is checked and the first violation is reported as
  // NotAPartialOrder(reflexivity/transitivity) or CycleDetected.
  static FinitePoset from_relation(std::vector<std::string> labels, Relation leq);

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  const std::vector<std::string>& labels() const;
  const std::string& label(std::size_t i) const;
  std::optional<std::size_t> find(std::string_view label) const;
  std::size_t index_of(std::string_view label) const;

  bool leq(std::size_t i, std::size_t j) const;
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  const Bits& above(std::size_t i) const;
  const Bits& below(std::size_t i) const;

  // Number of pairs in the closed relation.
  std::size_t relation_size() const;

  // Transitive reduction, sorted by (lower index, upper index).
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

  ElementSet empty_set() const;
  ElementSet full_set() const;
  ElementSet singleton(std::size_t i) const;
  ElementSet set_of(std::span<const std::size_t> indices) const;
  ElementSet set_of(std::initializer_list<std::string_view> labels) const;
  ElementSet set_of_labels(std::span<const std::string> labels) const;
  ElementSet set_of_bits(Bits bits) const;

  const void* identity() const { return impl_.get(); }

 private:
  struct Impl;
  explicit FinitePoset(std::shared_ptr<const Impl> impl);

  std::shared_ptr<const Impl> impl_;

  friend class ElementSet;
};

class ElementSet {
 public:
  const void* owner() const { return owner_.get(); }
  const Bits& bits() const { return bits_; }

  bool contains(std::size_t i) const { return bits_.test(i); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  std::vector<std::size_t> indices() const;

  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  ElementSet operator&(const ElementSet& rhs) const;
  ElementSet operator|(const ElementSet& rhs) const;
  ElementSet operator-(const ElementSet& rhs) const;
  // Complement within the owning poset.
  ElementSet complement() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.owner() == b.owner() && a.bits_ == b.bits_;
  }

 private:
  ElementSet(std::shared_ptr<const void> owner, Bits bits)
      : owner_(std::move(owner)), bits_(std::move(bits)) {}

  void require_same_owner(const ElementSet& other) const;

  std::shared_ptr<const void> owner_;
  Bits bits_;

  friend class FinitePoset;
};

// Throws ForeignSet unless `s` was cut from `p`.
void require_owned(const FinitePoset& p, const ElementSet& s);

ElementSet up_set(const FinitePoset& p, const ElementSet& a);
ElementSet down_set(const FinitePoset& p, const ElementSet& a);
bool is_upper_set(const FinitePoset& p, const ElementSet& a);
bool is_lower_set(const FinitePoset& p, const ElementSet& a);

ElementSet maximal_elements(const FinitePoset& p);
ElementSet minimal_elements(const FinitePoset& p);

// Nonempty and every two members have an upper bound inside the set.
bool is_directed(const FinitePoset& p, const ElementSet& d);

ElementSet upper_bounds(const FinitePoset& p, const ElementSet& a);

// Least upper bound, or nullopt when the upper bounds have no least member.
// Throws EmptySet for an empty argument.
std::optional<std::size_t> supremum(const FinitePoset& p, const ElementSet& d);

// Every finite directed set has a greatest element, so this always holds.
inline bool is_dcpo(const FinitePoset&) { return true; }

// Pairs ordered componentwise; element (i, j) has index i * q.size() + j and
// label "(a,b)".
FinitePoset product(const FinitePoset& p, const FinitePoset& q);

struct Subposet {
  FinitePoset poset;
  std::vector<std::size_t> to_parent;
};

// `s` with the inherited order and the parent's labels.
Subposet induced_subposet(const FinitePoset& p, const ElementSet& s);

// Order isomorphism a -> b as an index map, or nullopt.
std::optional<std::vector<std::size_t>> find_order_isomorphism(const FinitePoset& a,
                                                               const FinitePoset& b);
inline bool order_isomorphic(const FinitePoset& a, const FinitePoset& b) {
  return find_order_isomorphism(a, b).has_value();
}

// "{a,b}" with members in index order.
std::string format_set(const FinitePoset& p, const ElementSet& s);

}  // namespace maxpoint
