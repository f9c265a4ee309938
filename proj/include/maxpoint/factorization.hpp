#pragma once

// Domain models of a factor space built from an algebraic domain model of a
// product space.
//
// Given a finite poset P whose maximal points are labelled by X×Y, the
// pipeline enumerates the triples (U, V, k) with U a nonempty open of X, V an
// open neighbourhood of y0 and k compact with U×V ⊆ ↑k ∩ Max(P), orders them
// by
//
//     (U1,V1,k1) ⊑ (U2,V2,k2)  iff  k1 <= k2 and ↑k2 ∩ Max(P) ⊆ U1×V1,
//
// takes the ideal completion P_X of that order and checks that
// x ↦ {(U,V,k) : x ∈ U} is a homeomorphism from X onto Max(P_X).
//
// Points of X×Y are addressed on a grid: pair (x, y) has grid index
// x * |Y| + y, and subsets of the grid are PointMasks. Products are therefore
// limited to 64 points.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "maxpoint/ideal.hpp"
#include "maxpoint/poset.hpp"
#include "maxpoint/report.hpp"
#include "maxpoint/scott.hpp"
#include "maxpoint/topology.hpp"

namespace maxpoint {

struct ModelOptions {
  EnumerationLimits limits{};
  // Candidate triples examined while building Q.
  std::size_t max_triples = std::size_t{1} << 22;
};

struct FactorTopologies {
  Topology x;
  Topology y;
};

// Factor topologies of a topology on the grid X×Y: U is open in X iff U×Y is
// open, and dually for Y. Throws NotAProductTopology when the rectangles of
// the candidates do not generate `grid` exactly.
FactorTopologies factor_topologies(const Topology& grid, const std::vector<std::string>& x_labels,
                                   const std::vector<std::string>& y_labels);

// (maximal element label, (x label, y label))
using MaxLabeling = std::vector<std::pair<std::string, LabelPair>>;

class ProductModel {
 public:
  // Validates every hypothesis: Max(P) is in bijection with X×Y, y0 ∈ Y, P
  // is algebraic and the transported relative topology is a product.
  // Throws InvalidModel, UnknownLabel, DuplicateLabel, NotAProductTopology
  // or TooLarge.
  static ProductModel make(FinitePoset p, std::vector<std::string> x_labels,
                           std::vector<std::string> y_labels, const MaxLabeling& labeling,
                           const std::string& y0, const ModelOptions& opts = {});

  const FinitePoset& poset() const { return poset_; }
  const std::vector<std::string>& x_labels() const { return x_labels_; }
  const std::vector<std::string>& y_labels() const { return y_labels_; }
  std::size_t x_count() const { return x_labels_.size(); }
  std::size_t y_count() const { return y_labels_.size(); }
  std::size_t y0() const { return y0_; }
  const std::string& y0_label() const { return y_labels_[y0_]; }

  std::size_t grid(std::size_t x, std::size_t y) const { return x * y_count() + y; }
  std::size_t element_at(std::size_t x, std::size_t y) const { return element_of_grid_[grid(x, y)]; }
  // ↑k ∩ Max(P) as a grid mask.
  PointMask max_above(std::size_t k) const { return max_above_[k]; }
  PointMask rectangle(PointMask u, PointMask v) const;

  // Relative Scott topology of Max(P) carried to the grid.
  const Topology& grid_topology() const { return grid_topology_; }
  const FactorTopologies& factors() const { return factors_; }
  const ElementSet& compact() const { return compact_; }

  std::size_t x_index(const std::string& label) const;
  std::size_t y_index(const std::string& label) const;

  // The same model with a different base point.
  ProductModel with_y0(const std::string& y0) const;

 private:
  ProductModel(FinitePoset p, ElementSet compact) : poset_(std::move(p)), compact_(std::move(compact)) {}

  FinitePoset poset_;
  std::vector<std::string> x_labels_;
  std::vector<std::string> y_labels_;
  std::size_t y0_ = 0;
  std::vector<std::size_t> element_of_grid_;
  std::vector<PointMask> max_above_;
  Topology grid_topology_;
  FactorTopologies factors_;
  ElementSet compact_;
};

// Antichain of labelled points "(x,y)": the discrete product model.
ProductModel discrete_product_model(const std::vector<std::string>& x_labels,
                                    const std::vector<std::string>& y_labels, const std::string& y0,
                                    const ModelOptions& opts = {});

// Finite part of the model of ℕ×{0,1}: chain c0 < ... < cn < inf, points
// (i,b) for i <= n, and inf <= (0,1). X = {0..n}, Y = {0,1}, y0 = 0.
// `extra_covers` adds order relations on top of the ones listed.
ProductModel chain_under_pair_model(std::size_t n, std::span<const LabelPair> extra_covers = {},
                                    const ModelOptions& opts = {});

struct QTriple {
  PointMask u = 0;  // over X
  PointMask v = 0;  // over Y
  std::size_t k = 0;

  friend bool operator==(const QTriple&, const QTriple&) = default;
};

struct QPoset {
  FinitePoset order;
  std::vector<QTriple> triples;  // aligned with order's indices
};

// All qualifying triples, ordered by (k, U, V) with opens in canonical order.
std::vector<QTriple> enumerate_triples(const ProductModel& m, const ModelOptions& opts = {});

// (t1, t2) ∈ ⊑ per the two order conditions, row-wise.
FinitePoset::Relation q_relation(const ProductModel& m, std::span<const QTriple> triples);

// Orders the given triples. Throws InvalidModel for a triple violating
// U×V ⊆ ↑k ∩ Max(P), and NotAPartialOrder/CycleDetected when ⊑ fails an
// axiom.
QPoset assemble_Q(const ProductModel& m, std::vector<QTriple> triples);
QPoset build_Q(const ProductModel& m, const ModelOptions& opts = {});

std::string triple_label(const ProductModel& m, const QTriple& t);

// {(U,V,k) ∈ Q : x ∈ U}
ElementSet j_members(const ProductModel& m, const QPoset& q, std::size_t x);
// Throws NotAnIdeal when j_members fails to be lower or directed.
Ideal ideal_J(const ProductModel& m, const QPoset& q, std::size_t x);

// ⋂{U×V} and ⋂{↑k ∩ Max(P)} over the triples of an ideal.
PointMask rectangle_meet(const ProductModel& m, const QPoset& q, const ElementSet& ideal);
PointMask upper_max_meet(const ProductModel& m, const QPoset& q, const ElementSet& ideal);
// ⋂{U : (U,V,k) ∈ J(x)} as a mask over X.
PointMask open_meet_of_J(const ProductModel& m, const QPoset& q, std::size_t x);

struct FactorResult {
  QPoset q;
  IdealCompletion px;
  std::vector<std::size_t> f;        // x -> index in px.poset
  Topology max_space;                // relative topology on Max(P_X)
  std::vector<std::size_t> f_point;  // x -> point of max_space
  Report report;
};

// Checks every claim about `q` and records verdicts with witnesses; failed
// claims never throw (TooLarge still does).
FactorResult verify_factorization(const ProductModel& m, QPoset q, const ModelOptions& opts = {});

// Full pipeline; throws VerificationFailed naming the first failed claim.
FactorResult factor_model(const ProductModel& m, const ModelOptions& opts = {});

struct LowerSetModel {
  Subposet lower;                  // ↓(X×{y}) with the inherited order
  bool scott_closed = false;       // in P
  bool slice_closed = false;       // X×{y} relatively closed in Max(P)
  bool ambient_ideal_domain = false;
  bool max_is_slice = false;       // Max(↓(X×{y})) = X×{y}
  bool homeomorphic = false;       // Max(↓(X×{y})) ≅ X
  Report report;
};

// Never throws on negative findings; they are recorded in the report.
LowerSetModel lower_set_model(const ProductModel& m, const std::string& y_label, const ModelOptions& opts = {});

struct LowerClosureFinding {
  bool hypotheses = false;  // P ideal domain and X' relatively closed in Max(P)
  bool scott_closed = false;
  bool ideal_domain = false;
};

// ↓X' for X' ⊆ Max(P).
LowerClosureFinding lower_closure_check(const FinitePoset& p, const ElementSet& x_prime,
                                        const EnumerationLimits& limits = {});

struct AlgebraicModel {
  IdealCompletion completion;
  Report report;
};

// Idl(P) together with checks that it is algebraic and that ↓ carries Max(P)
// homeomorphically onto Max(Idl(P)).
AlgebraicModel algebraic_model(const FinitePoset& p, const EnumerationLimits& limits = {});

}  // namespace maxpoint
