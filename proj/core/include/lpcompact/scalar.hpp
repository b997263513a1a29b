#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "lpcompact/rational.hpp"

namespace lpcompact {

// Integrability exponent p >= 1. Exact powers are taken whenever p is an
// integer; fractional p falls back to double evaluation.
class Exponent {
 public:
  explicit Exponent(Rational p) : p_(std::move(p)) {
    if (p_ < Rational(1)) throw InvalidArgumentError("exponent must be >= 1");
  }
  Exponent(long long p) : Exponent(Rational(p)) {}  // NOLINT

  const Rational& rational() const { return p_; }
  bool integral() const { return p_.is_integer(); }
  long as_long() const { return static_cast<long>(p_.num().convert_to<long long>()); }
  double to_double() const { return p_.to_double(); }
  std::string to_string() const { return p_.to_string(); }

  friend bool operator==(const Exponent& a, const Exponent& b) { return a.p_ == b.p_; }

 private:
  Rational p_;
};

// A nonnegative-or-signed quantity that is either an exact rational or a
// double approximation. Exactness propagates through arithmetic; every
// report emits both forms when the exact one exists.
class Scalar {
 public:
  Scalar() : exact_(true), r_(0), a_(0.0) {}

  static Scalar from(Rational r) {
    Scalar s;
    s.exact_ = true;
    s.a_ = r.to_double();
    s.r_ = std::move(r);
    return s;
  }
  static Scalar from(long long n) { return from(Rational(n)); }
  static Scalar approx(double v) {
    Scalar s;
    s.exact_ = false;
    s.r_ = Rational(0);
    s.a_ = v;
    return s;
  }

  bool exact() const { return exact_; }
  const Rational& rat() const {
    if (!exact_) throw InvalidArgumentError("no exact value available");
    return r_;
  }
  double to_double() const { return exact_ ? r_.to_double() : a_; }
  bool is_zero() const { return exact_ ? r_.is_zero() : a_ == 0.0; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return from(a.r_ + b.r_);
    return approx(a.to_double() + b.to_double());
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return from(a.r_ - b.r_);
    return approx(a.to_double() - b.to_double());
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return from(a.r_ * b.r_);
    return approx(a.to_double() * b.to_double());
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return from(a.r_ / b.r_);
    return approx(a.to_double() / b.to_double());
  }
  friend Scalar operator-(const Scalar& a) {
    return a.exact_ ? from(-a.r_) : approx(-a.a_);
  }
  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }

  Scalar abs() const { return exact_ ? from(lpcompact::abs(r_)) : approx(std::fabs(a_)); }

  Scalar pow(const Exponent& p) const {
    if (exact_ && p.integral()) return from(lpcompact::pow(r_, p.as_long()));
    return approx(std::pow(to_double(), p.to_double()));
  }

  // k-th root; exact when the rational root exists.
  Scalar root(unsigned k) const {
    if (k == 1) return *this;
    if (exact_) {
      if (auto r = exact_root(r_, k)) return from(*r);
    }
    return approx(std::pow(to_double(), 1.0 / k));
  }

  // Three-way compare: exact when both sides are exact, double otherwise.
  static int compare(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) {
      if (a.r_ < b.r_) return -1;
      if (b.r_ < a.r_) return 1;
      return 0;
    }
    const double x = a.to_double(), y = b.to_double();
    return x < y ? -1 : (x > y ? 1 : 0);
  }

  // a <= b, with `tol` slack applied only on the inexact path.
  bool leq(const Scalar& b, double tol = 0.0) const {
    if (exact_ && b.exact_) return !(b.r_ < r_);
    return to_double() <= b.to_double() + tol;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.exact_ != b.exact_) return false;
    return a.exact_ ? a.r_ == b.r_ : a.a_ == b.a_;
  }
  friend bool operator<(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return compare(a, b) >= 0; }

  std::optional<std::string> exact_text() const {
    if (!exact_) return std::nullopt;
    return r_.to_string();
  }
  std::string decimal_text(unsigned digits = 12) const;
  std::string to_string() const { return exact_ ? r_.to_string() : decimal_text(); }

 private:
  bool exact_;
  Rational r_;
  double a_;
};

inline const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }
inline const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }

}  // namespace lpcompact
