#pragma once

// Symbolic model of the ideal domains L and L̂.
//
//   L  = E ∪ (F × {0,1}),  E = ℕ × (ℕ ∪ {∞}),  F = ∏_i C_i,  C_i = {i} × ℕ
//
// ordered by (i,m) <= (i,n) <= (i,∞) for m <= n and φ(i) <= (φ,0) <= (φ,1).
// L̂ drops every (φ,1). F is uncountable; only functions given by finitely
// many exceptions over a default value are representable, which is exactly
// the shape of the diagonal function built from a finite or truncated
// family of opens.
//
// SymbolicOpen describes the upper sets used by the non-G-delta argument:
// a threshold per chain (absent: the chain and its top are excluded),
// optionally every (φ,1), and finitely many cylinders {(φ,b) : φ(c) >= v for
// each condition, b in a level set}.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "maxpoint/poset.hpp"
#include "maxpoint/report.hpp"

namespace maxpoint {

using Nat = std::uint64_t;

enum class Space { L, LHat };

std::string to_string(Space s);

class PhiFunc {
 public:
  PhiFunc() = default;
  PhiFunc(std::map<Nat, Nat> exceptions, Nat default_value)
      : exceptions_(std::move(exceptions)), default_(default_value) {}

  Nat operator()(Nat i) const;

  // Exceptions exactly as supplied, including ones equal to the default.
  const std::map<Nat, Nat>& exceptions() const { return exceptions_; }
  Nat default_value() const { return default_; }

  // Drops exceptions that coincide with the default.
  PhiFunc normalized() const;

  // "{0:0,1:1,2:2}"
  std::string exceptions_string() const;
  // "{0:0,1:1|0}" with the default after the bar.
  std::string str() const;

  // Same function on every index.
  friend bool operator==(const PhiFunc& a, const PhiFunc& b);

 private:
  std::map<Nat, Nat> exceptions_;
  Nat default_ = 0;
};

struct ChainPt {
  Nat chain = 0;
  Nat height = 0;
  friend bool operator==(const ChainPt&, const ChainPt&) = default;
};

struct ChainTop {
  Nat chain = 0;
  friend bool operator==(const ChainTop&, const ChainTop&) = default;
};

struct PhiPt {
  PhiFunc phi;
  int level = 0;  // 0 or 1
  friend bool operator==(const PhiPt&, const PhiPt&) = default;
};

using LPoint = std::variant<ChainPt, ChainTop, PhiPt>;

std::string to_string(const LPoint& p);

// Whether p is a point of the given space (level 1 is absent from L̂).
bool is_point_of(const LPoint& p, Space s);

bool l_leq(const LPoint& a, const LPoint& b);

// Maximal points: the chain tops and the top level of each φ.
bool is_maximal(const LPoint& p, Space s);

// Chain index -> threshold; nullopt means the chain is excluded entirely.
class ThresholdRule {
 public:
  ThresholdRule() = default;
  ThresholdRule(std::optional<Nat> default_value, std::map<Nat, std::optional<Nat>> exceptions)
      : default_(default_value), exceptions_(std::move(exceptions)) {}

  static ThresholdRule uniform(Nat t) { return ThresholdRule(t, {}); }

  std::optional<Nat> operator()(Nat i) const;
  const std::optional<Nat>& default_value() const { return default_; }
  const std::map<Nat, std::optional<Nat>>& exceptions() const { return exceptions_; }

  // Every chain has a finite threshold.
  bool all_finite() const;

 private:
  std::optional<Nat> default_;
  std::map<Nat, std::optional<Nat>> exceptions_;
};

struct PhiCylinder {
  std::map<Nat, Nat> conds;            // coordinate -> least admissible value
  std::array<bool, 2> levels{false, false};
};

struct SymbolicOpen {
  ThresholdRule thresholds;
  bool all_phi_level1 = false;
  std::vector<PhiCylinder> extra_phi;
};

bool symbolic_member(const SymbolicOpen& u, const LPoint& p);

// First reason `u` fails to denote a Scott open set of the space, or nullopt.
std::optional<std::string> open_violation(const SymbolicOpen& u, Space s);
inline bool validate_open(const SymbolicOpen& u, Space s) { return !open_violation(u, s).has_value(); }

// Max(space) ⊆ u. Membership of (φ,b) is monotone in φ, so covering the
// constant-zero function at the top level covers all of them.
bool contains_max(const SymbolicOpen& u, Space s);

// A countable family of opens: an explicit list, or a rule evaluated for the
// first `eval_bound` indices.
class OpenFamily {
 public:
  using Rule = std::function<SymbolicOpen(Nat)>;

  static OpenFamily finite(std::vector<SymbolicOpen> members);
  static OpenFamily rule(Rule rule, Nat eval_bound, std::string description);

  bool is_rule() const { return static_cast<bool>(rule_); }
  // Number of members, or the evaluation bound for rules.
  Nat size() const;
  SymbolicOpen at(Nat j) const;
  const std::string& description() const { return description_; }

 private:
  std::vector<SymbolicOpen> members_;
  Rule rule_;
  Nat eval_bound_ = 0;
  std::string description_;
};

struct DiagonalWitness {
  PhiFunc phi;
  Report certificate;
};

// φ(j) = least member of U_j ∩ C_j (plus offsets[j] when given). Throws
// NotCoveringMax if some member misses Max(L) and InvalidSymbolicOpen if
// one is not a valid open of L.
DiagonalWitness diagonal_witness(const OpenFamily& family, std::span<const Nat> offsets = {});

// L̂ minus ↓(i,k) for every i <= k.
SymbolicOpen lhat_open(Nat k);

// Certifies that {lhat_open(k)} cuts Max(L̂) out of L̂, checking every index
// up to `bound` point-wise plus the structural exclusion rule.
Report gdelta_certificate_lhat(Nat bound);

struct Truncation {
  FinitePoset poset;
  std::vector<LPoint> points;  // aligned with poset indices

  std::optional<std::size_t> find(const LPoint& p) const;
};

struct TruncationLimits {
  std::size_t max_elements = std::size_t{1} << 14;
};

// Chains (i,0..depth-1), (i,∞) for i < width, every φ: {0..width-1} ->
// {0..depth-1} (default 0 elsewhere) at level 0, and at level 1 in L.
// Throws TooLarge beyond the element bound and InvalidModel for zero sizes.
Truncation truncate_L(Nat width, Nat depth, Space s, const TruncationLimits& limits = {});

}  // namespace maxpoint
