#pragma once

#include <concepts>
#include <map>
#include <string>
#include <vector>

#include "lpcompact/scalar.hpp"

namespace lpcompact {

enum class NormKind { sum, euclid, max };

std::string to_string(NormKind k);

// Value contract for the codomain: linear combinations plus a norm. Norms
// stay exact for the sum and max kinds; the euclidean kind is exact on
// squared quantities and approximate after the square root.
template <class V>
concept NormedVector = requires(const V& a, const V& b, const Rational& c, const Exponent& p) {
  { a + b } -> std::same_as<V>;
  { a - b } -> std::same_as<V>;
  { -a } -> std::same_as<V>;
  { a.scaled(c) } -> std::same_as<V>;
  { a.zero_like() } -> std::same_as<V>;
  { a.norm() } -> std::same_as<Scalar>;
  { a.norm_power(p) } -> std::same_as<Scalar>;
  { a.is_zero() } -> std::same_as<bool>;
  { a == b } -> std::convertible_to<bool>;
  { a.describe() } -> std::same_as<std::string>;
};

// Fixed-dimension vector over exact-or-approx scalars, with a choice of
// l1 / l2 / linf norm. Dimension-1 sum vectors double as the scalar-valued
// step-function codomain (norm images, Rademacher signs, ...).
class FiniteDimVector {
 public:
  FiniteDimVector(NormKind kind, std::vector<Scalar> components)
      : kind_(kind), comps_(std::move(components)) {
    if (comps_.empty()) throw InvalidArgumentError("vector dimension must be positive");
  }
  static FiniteDimVector zeros(NormKind kind, std::size_t dim) {
    return {kind, std::vector<Scalar>(dim)};
  }
  static FiniteDimVector of(NormKind kind, const std::vector<Rational>& components) {
    std::vector<Scalar> c;
    c.reserve(components.size());
    for (const auto& r : components) c.push_back(Scalar::from(r));
    return {kind, std::move(c)};
  }
  static FiniteDimVector scalar(Scalar value) {
    return {NormKind::sum, std::vector<Scalar>{std::move(value)}};
  }
  static FiniteDimVector scalar(Rational value) { return scalar(Scalar::from(std::move(value))); }

  NormKind kind() const { return kind_; }
  std::size_t dim() const { return comps_.size(); }
  const Scalar& component(std::size_t i) const { return comps_.at(i); }
  const std::vector<Scalar>& components() const { return comps_; }

  const Scalar& scalar_value() const {
    if (comps_.size() != 1)
      throw InvalidArgumentError("scalar_value on a vector of dimension > 1");
    return comps_[0];
  }

  FiniteDimVector zero_like() const { return zeros(kind_, comps_.size()); }

  friend FiniteDimVector operator+(const FiniteDimVector& a, const FiniteDimVector& b) {
    a.check_compatible(b);
    std::vector<Scalar> out;
    out.reserve(a.comps_.size());
    for (std::size_t i = 0; i < a.comps_.size(); ++i) out.push_back(a.comps_[i] + b.comps_[i]);
    return {a.kind_, std::move(out)};
  }
  friend FiniteDimVector operator-(const FiniteDimVector& a, const FiniteDimVector& b) {
    a.check_compatible(b);
    std::vector<Scalar> out;
    out.reserve(a.comps_.size());
    for (std::size_t i = 0; i < a.comps_.size(); ++i) out.push_back(a.comps_[i] - b.comps_[i]);
    return {a.kind_, std::move(out)};
  }
  friend FiniteDimVector operator-(const FiniteDimVector& a) {
    std::vector<Scalar> out;
    out.reserve(a.comps_.size());
    for (const auto& c : a.comps_) out.push_back(-c);
    return {a.kind_, std::move(out)};
  }
  FiniteDimVector scaled(const Rational& c) const {
    std::vector<Scalar> out;
    out.reserve(comps_.size());
    const Scalar s = Scalar::from(c);
    for (const auto& v : comps_) out.push_back(v * s);
    return {kind_, std::move(out)};
  }

  Scalar norm() const;
  Scalar norm_power(const Exponent& p) const;
  bool is_zero() const {
    for (const auto& c : comps_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const FiniteDimVector& a, const FiniteDimVector& b) {
    return a.kind_ == b.kind_ && a.comps_ == b.comps_;
  }

  std::string describe() const;

 private:
  void check_compatible(const FiniteDimVector& o) const {
    if (kind_ != o.kind_ || comps_.size() != o.comps_.size())
      throw InvalidArgumentError("vector kinds or dimensions differ");
  }

  NormKind kind_;
  std::vector<Scalar> comps_;
};

// Finitely supported sequence with exact rational entries; models the
// absolutely summable sequences (sum norm) or bounded sequences (max norm)
// at finite support. Canonical form stores no zero entries.
class SparseSeqVector {
 public:
  explicit SparseSeqVector(NormKind kind = NormKind::sum,
                           std::map<unsigned, Rational> entries = {})
      : kind_(kind), entries_(std::move(entries)) {
    if (kind_ == NormKind::euclid)
      throw InvalidArgumentError("sparse sequences support sum and max norms only");
    prune();
  }

  NormKind kind() const { return kind_; }
  const std::map<unsigned, Rational>& entries() const { return entries_; }

  SparseSeqVector zero_like() const { return SparseSeqVector(kind_); }

  friend SparseSeqVector operator+(const SparseSeqVector& a, const SparseSeqVector& b) {
    a.check_compatible(b);
    auto out = a.entries_;
    for (const auto& [i, v] : b.entries_) {
      auto [it, fresh] = out.try_emplace(i, v);
      if (!fresh) it->second += v;
    }
    return SparseSeqVector(a.kind_, std::move(out));
  }
  friend SparseSeqVector operator-(const SparseSeqVector& a, const SparseSeqVector& b) {
    return a + (-b);
  }
  friend SparseSeqVector operator-(const SparseSeqVector& a) {
    auto out = a.entries_;
    for (auto& [i, v] : out) v = -v;
    return SparseSeqVector(a.kind_, std::move(out));
  }
  SparseSeqVector scaled(const Rational& c) const {
    auto out = entries_;
    for (auto& [i, v] : out) v *= c;
    return SparseSeqVector(kind_, std::move(out));
  }

  Scalar norm() const {
    Rational acc(0);
    for (const auto& [i, v] : entries_) {
      const Rational a = lpcompact::abs(v);
      if (kind_ == NormKind::sum) {
        acc += a;
      } else if (acc < a) {
        acc = a;
      }
    }
    return Scalar::from(acc);
  }
  Scalar norm_power(const Exponent& p) const { return norm().pow(p); }
  bool is_zero() const { return entries_.empty(); }

  friend bool operator==(const SparseSeqVector& a, const SparseSeqVector& b) {
    return a.kind_ == b.kind_ && a.entries_ == b.entries_;
  }

  // "index:value" pairs in ascending index order.
  std::string describe() const;

 private:
  void check_compatible(const SparseSeqVector& o) const {
    if (kind_ != o.kind_) throw InvalidArgumentError("sequence norm kinds differ");
  }
  void prune() {
    for (auto it = entries_.begin(); it != entries_.end();) {
      if (it->second.is_zero())
        it = entries_.erase(it);
      else
        ++it;
    }
  }

  NormKind kind_;
  std::map<unsigned, Rational> entries_;
};

// n-th canonical basis sequence: single entry 1 at index n (1-based).
SparseSeqVector canonical_basis(unsigned n);

static_assert(NormedVector<FiniteDimVector>);
static_assert(NormedVector<SparseSeqVector>);

}  // namespace lpcompact
