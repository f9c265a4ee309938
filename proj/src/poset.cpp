#include "maxpoint/poset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace maxpoint {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::ForeignSet: return "ForeignSet";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::NotAProductTopology: return "NotAProductTopology";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::NotCoveringMax: return "NotCoveringMax";
    case ErrorCode::InvalidSymbolicOpen: return "InvalidSymbolicOpen";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_verification_error(ErrorCode code) {
  return code == ErrorCode::VerificationFailed || code == ErrorCode::NotAnIdeal;
}

struct FinitePoset::Impl {
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::size_t> index;
  Relation up;
  Relation down;
  std::size_t pairs = 0;
};

namespace {

std::unordered_map<std::string, std::size_t> index_labels(const std::vector<std::string>& labels) {
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second) {
      throw Error(ErrorCode::DuplicateLabel, "label '" + labels[i] + "' appears more than once");
    }
  }
  return index;
}

}  // namespace

FinitePoset::FinitePoset() : impl_(std::make_shared<Impl>()) {}

FinitePoset::FinitePoset(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

FinitePoset FinitePoset::build(std::vector<std::string> labels, std::span<const LabelPair> covers) {
  auto index = index_labels(labels);
  const std::size_t n = labels.size();
  Relation leq(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) leq[i].set(i);
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo);
    if (a == index.end()) throw Error(ErrorCode::UnknownLabel, "cover references '" + lo + "'");
    auto b = index.find(hi);
    if (b == index.end()) throw Error(ErrorCode::UnknownLabel, "cover references '" + hi + "'");
    leq[a->second].set(b->second);
  }
  // Warshall on rows: whenever i <= k, everything above k is above i.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (leq[i].test(k)) leq[i] |= leq[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = leq[i].find_next(i); j < n; j = leq[i].find_next(j)) {
      if (leq[j].test(i)) {
        throw Error(ErrorCode::CycleDetected,
                    "'" + labels[i] + "' and '" + labels[j] + "' lie on a common cycle");
      }
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->labels = std::move(labels);
  impl->index = std::move(index);
  impl->up = std::move(leq);
  impl->down.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = impl->up[i].find_first(); j < n; j = impl->up[i].find_next(j)) {
      impl->down[j].set(i);
      ++impl->pairs;
    }
  }
  return FinitePoset(std::move(impl));
}

FinitePoset FinitePoset::from_relation(std::vector<std::string> labels, Relation leq) {
  auto index = index_labels(labels);
  const std::size_t n = labels.size();
  if (leq.size() != n) throw Error(ErrorCode::NotAPartialOrder, "relation has wrong row count");
  for (auto& row : leq) {
    if (row.size() != n) throw Error(ErrorCode::NotAPartialOrder, "relation has wrong row width");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq[i].test(i)) {
      throw Error(ErrorCode::NotAPartialOrder, "reflexivity fails at '" + labels[i] + "'");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = leq[i].find_first(); j < n; j = leq[i].find_next(j)) {
      if (j != i && leq[j].test(i)) {
        throw Error(ErrorCode::CycleDetected,
                    "antisymmetry fails for '" + labels[i] + "' and '" + labels[j] + "'");
      }
      if (!leq[j].is_subset_of(leq[i])) {
        std::size_t k = (leq[j] - leq[i]).find_first();
        throw Error(ErrorCode::NotAPartialOrder, "transitivity fails for '" + labels[i] + "' <= '" +
                                                     labels[j] + "' <= '" + labels[k] + "'");
      }
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->labels = std::move(labels);
  impl->index = std::move(index);
  impl->up = std::move(leq);
  impl->down.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = impl->up[i].find_first(); j < n; j = impl->up[i].find_next(j)) {
      impl->down[j].set(i);
      ++impl->pairs;
    }
  }
  return FinitePoset(std::move(impl));
}

std::size_t FinitePoset::size() const { return impl_->labels.size(); }
const std::vector<std::string>& FinitePoset::labels() const { return impl_->labels; }
const std::string& FinitePoset::label(std::size_t i) const { return impl_->labels.at(i); }

std::optional<std::size_t> FinitePoset::find(std::string_view label) const {
  auto it = impl_->index.find(std::string(label));
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t FinitePoset::index_of(std::string_view label) const {
  auto i = find(label);
  if (!i) throw Error(ErrorCode::UnknownLabel, "no element labelled '" + std::string(label) + "'");
  return *i;
}

bool FinitePoset::leq(std::size_t i, std::size_t j) const { return impl_->up.at(i).test(j); }
const Bits& FinitePoset::above(std::size_t i) const { return impl_->up.at(i); }
const Bits& FinitePoset::below(std::size_t i) const { return impl_->down.at(i); }
std::size_t FinitePoset::relation_size() const { return impl_->pairs; }

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::cover_pairs() const {
  const std::size_t n = size();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    Bits strict = impl_->up[i];
    strict.reset(i);
    // j covers i iff nothing strictly between them.
    for (std::size_t j = strict.find_first(); j < n; j = strict.find_next(j)) {
      Bits between = strict & impl_->down[j];
      between.reset(j);
      if (between.none()) out.emplace_back(i, j);
    }
  }
  return out;
}

ElementSet FinitePoset::empty_set() const { return ElementSet(impl_, Bits(size())); }

ElementSet FinitePoset::full_set() const {
  Bits b(size());
  b.set();
  return ElementSet(impl_, std::move(b));
}

ElementSet FinitePoset::singleton(std::size_t i) const {
  Bits b(size());
  b.set(i);
  return ElementSet(impl_, std::move(b));
}

ElementSet FinitePoset::set_of(std::span<const std::size_t> indices) const {
  Bits b(size());
  for (auto i : indices) b.set(i);
  return ElementSet(impl_, std::move(b));
}

ElementSet FinitePoset::set_of(std::initializer_list<std::string_view> labels) const {
  Bits b(size());
  for (auto l : labels) b.set(index_of(l));
  return ElementSet(impl_, std::move(b));
}

ElementSet FinitePoset::set_of_labels(std::span<const std::string> labels) const {
  Bits b(size());
  for (const auto& l : labels) b.set(index_of(l));
  return ElementSet(impl_, std::move(b));
}

ElementSet FinitePoset::set_of_bits(Bits bits) const {
  if (bits.size() != size()) throw Error(ErrorCode::ForeignSet, "bitset width does not match poset");
  return ElementSet(impl_, std::move(bits));
}

std::vector<std::size_t> ElementSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) out.push_back(i);
  return out;
}

void ElementSet::require_same_owner(const ElementSet& other) const {
  if (owner() != other.owner()) throw Error(ErrorCode::ForeignSet, "sets belong to different posets");
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  require_same_owner(other);
  return bits_.is_subset_of(other.bits_);
}

bool ElementSet::intersects(const ElementSet& other) const {
  require_same_owner(other);
  return bits_.intersects(other.bits_);
}

ElementSet ElementSet::operator&(const ElementSet& rhs) const {
  require_same_owner(rhs);
  return ElementSet(owner_, bits_ & rhs.bits_);
}

ElementSet ElementSet::operator|(const ElementSet& rhs) const {
  require_same_owner(rhs);
  return ElementSet(owner_, bits_ | rhs.bits_);
}

ElementSet ElementSet::operator-(const ElementSet& rhs) const {
  require_same_owner(rhs);
  return ElementSet(owner_, bits_ - rhs.bits_);
}

ElementSet ElementSet::complement() const { return ElementSet(owner_, ~bits_); }

void require_owned(const FinitePoset& p, const ElementSet& s) {
  if (s.owner() != p.identity()) throw Error(ErrorCode::ForeignSet, "set does not belong to this poset");
}

ElementSet up_set(const FinitePoset& p, const ElementSet& a) {
  require_owned(p, a);
  Bits out(p.size());
  for (auto i : a.indices()) out |= p.above(i);
  return p.set_of_bits(std::move(out));
}

ElementSet down_set(const FinitePoset& p, const ElementSet& a) {
  require_owned(p, a);
  Bits out(p.size());
  for (auto i : a.indices()) out |= p.below(i);
  return p.set_of_bits(std::move(out));
}

bool is_upper_set(const FinitePoset& p, const ElementSet& a) {
  require_owned(p, a);
  for (auto i : a.indices()) {
    if (!p.above(i).is_subset_of(a.bits())) return false;
  }
  return true;
}

bool is_lower_set(const FinitePoset& p, const ElementSet& a) {
  require_owned(p, a);
  for (auto i : a.indices()) {
    if (!p.below(i).is_subset_of(a.bits())) return false;
  }
  return true;
}

ElementSet maximal_elements(const FinitePoset& p) {
  Bits out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.above(i).count() == 1) out.set(i);
  }
  return p.set_of_bits(std::move(out));
}

ElementSet minimal_elements(const FinitePoset& p) {
  Bits out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.below(i).count() == 1) out.set(i);
  }
  return p.set_of_bits(std::move(out));
}

bool is_directed(const FinitePoset& p, const ElementSet& d) {
  require_owned(p, d);
  if (d.empty()) return false;
  const auto members = d.indices();
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (!(p.above(members[a]) & p.above(members[b])).intersects(d.bits())) return false;
    }
  }
  return true;
}

ElementSet upper_bounds(const FinitePoset& p, const ElementSet& a) {
  require_owned(p, a);
  Bits ub(p.size());
  ub.set();
  for (auto i : a.indices()) ub &= p.above(i);
  return p.set_of_bits(std::move(ub));
}

std::optional<std::size_t> supremum(const FinitePoset& p, const ElementSet& d) {
  require_owned(p, d);
  if (d.empty()) throw Error(ErrorCode::EmptySet, "supremum of the empty set");
  const auto ub = upper_bounds(p, d);
  for (auto u : ub.indices()) {
    if (ub.bits().is_subset_of(p.above(u))) return u;
  }
  return std::nullopt;
}

FinitePoset product(const FinitePoset& p, const FinitePoset& q) {
  const std::size_t n = p.size();
  const std::size_t m = q.size();
  std::vector<std::string> labels;
  labels.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
  }
  FinitePoset::Relation leq(n * m, Bits(n * m));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = p.above(a).find_first(); c < n; c = p.above(a).find_next(c)) {
        for (std::size_t d = q.above(b).find_first(); d < m; d = q.above(b).find_next(d)) {
          leq[a * m + b].set(c * m + d);
        }
      }
    }
  }
  return FinitePoset::from_relation(std::move(labels), std::move(leq));
}

Subposet induced_subposet(const FinitePoset& p, const ElementSet& s) {
  require_owned(p, s);
  Subposet out;
  out.to_parent = s.indices();
  const std::size_t k = out.to_parent.size();
  std::vector<std::string> labels;
  labels.reserve(k);
  for (auto i : out.to_parent) labels.push_back(p.label(i));
  FinitePoset::Relation leq(k, Bits(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (p.leq(out.to_parent[a], out.to_parent[b])) leq[a].set(b);
    }
  }
  out.poset = FinitePoset::from_relation(std::move(labels), std::move(leq));
  return out;
}

namespace {

struct IsoSearch {
  const FinitePoset& a;
  const FinitePoset& b;
  std::vector<std::size_t> order;  // a-elements in assignment order
  std::vector<std::size_t> map;    // a -> b, npos when unassigned
  std::vector<bool> used;
  std::vector<std::pair<std::size_t, std::size_t>> sig_a, sig_b;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool consistent(std::size_t x, std::size_t y) const {
    if (sig_a[x] != sig_b[y]) return false;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const std::size_t z = order[k];
      if (map[z] == npos) break;
      if (a.leq(x, z) != b.leq(y, map[z]) || a.leq(z, x) != b.leq(map[z], y)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const std::size_t x = order[depth];
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (used[y] || !consistent(x, y)) continue;
      map[x] = y;
      used[y] = true;
      if (extend(depth + 1)) return true;
      map[x] = npos;
      used[y] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::size_t>> find_order_isomorphism(const FinitePoset& a,
                                                               const FinitePoset& b) {
  if (a.size() != b.size() || a.relation_size() != b.relation_size()) return std::nullopt;
  const std::size_t n = a.size();
  IsoSearch s{a, b, {}, std::vector<std::size_t>(n, IsoSearch::npos), std::vector<bool>(n, false), {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    s.sig_a.emplace_back(a.below(i).count(), a.above(i).count());
    s.sig_b.emplace_back(b.below(i).count(), b.above(i).count());
  }
  auto sa = s.sig_a, sb = s.sig_b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  // Bottom-up order keeps each new element related to already-placed ones.
  s.order.resize(n);
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](std::size_t x, std::size_t y) { return s.sig_a[x] < s.sig_a[y]; });
  if (!s.extend(0)) return std::nullopt;
  return s.map;
}

std::string format_set(const FinitePoset& p, const ElementSet& s) {
  require_owned(p, s);
  std::string out = "{";
  bool first = true;
  for (auto i : s.indices()) {
    if (!first) out += ",";
    out += p.label(i);
    first = false;
  }
  return out + "}";
}

}  // namespace maxpoint
