#include "lpcompact/vectors.hpp"

#include <cmath>

namespace lpcompact {

std::string to_string(NormKind k) {
  switch (k) {
    case NormKind::sum: return "sum";
    case NormKind::euclid: return "euclid";
    case NormKind::max: return "max";
  }
  return "?";
}

Scalar FiniteDimVector::norm() const {
  if (kind_ == NormKind::euclid) {
    Scalar s2;
    for (const auto& c : comps_) s2 += c * c;
    return s2.root(2);
  }
  Scalar acc;
  for (const auto& c : comps_) {
    const Scalar a = c.abs();
    if (kind_ == NormKind::sum) {
      acc += a;
    } else if (acc < a) {
      acc = a;
    }
  }
  return acc;
}

Scalar FiniteDimVector::norm_power(const Exponent& p) const {
  if (kind_ == NormKind::euclid && p.integral() && p.as_long() % 2 == 0) {
    // even powers of the euclidean norm stay exact
    Scalar s2;
    for (const auto& c : comps_) s2 += c * c;
    return s2.pow(Exponent(p.as_long() / 2));
  }
  return norm().pow(p);
}

std::string FiniteDimVector::describe() const {
  std::string s = "(";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) s += " ";
    s += comps_[i].to_string();
  }
  return s + ")";
}

std::string SparseSeqVector::describe() const {
  if (entries_.empty()) return "0";
  std::string s;
  for (const auto& [i, v] : entries_) {
    if (!s.empty()) s += " ";
    s += std::to_string(i) + ":" + v.to_string();
  }
  return s;
}

SparseSeqVector canonical_basis(unsigned n) {
  if (n < 1) throw InvalidArgumentError("canonical basis index starts at 1");
  std::map<unsigned, Rational> e;
  e.emplace(n, Rational(1));
  return SparseSeqVector(NormKind::sum, std::move(e));
}

}  // namespace lpcompact
