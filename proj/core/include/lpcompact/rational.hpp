#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lpcompact/errors.hpp"

namespace lpcompact {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

// Exact rational number. All measure arithmetic in the library runs on this
// type; the backing representation is always kept in lowest terms with a
// positive denominator.
class Rational {
 public:
  using Backend =
      boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                        boost::multiprecision::cpp_int_backend<>>,
                                    boost::multiprecision::et_off>;

  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long long num, long long den) : v_(make(Int(num), Int(den))) {}
  Rational(const Int& num, const Int& den) : v_(make(num, den)) {}
  explicit Rational(Backend v) : v_(std::move(v)) {}

  const Backend& backend() const { return v_; }
  Int num() const { return numerator(v_); }
  Int den() const { return denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_negative() const { return v_ < 0; }
  bool is_integer() const { return denominator(v_) == 1; }
  int sign() const { return v_.sign(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Backend(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Backend(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Backend(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw InvalidArgumentError("rational division by zero");
    return Rational(Backend(a.v_ / b.v_));
  }
  friend Rational operator-(const Rational& a) { return Rational(Backend(-a.v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  double to_double() const { return v_.convert_to<double>(); }

  // "7/8" or plain "3" for integers.
  std::string to_string() const;

  // Exact fixed-point rendering with `digits` fractional digits, rounded
  // half away from zero. Used for the decimal column of machine reports.
  std::string to_decimal(unsigned digits = 12) const;

  // Accepts "3", "-7/8", "0.25", "+1.5". No exponents.
  static std::optional<Rational> parse(std::string_view text);

 private:
  static Backend make(const Int& num, const Int& den) {
    if (den == 0) throw InvalidArgumentError("rational with zero denominator");
    if (den < 0) return Backend(Int(-num), Int(-den));
    return Backend(num, den);
  }

  Backend v_;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

// r^e for integer e; r must be nonzero when e < 0.
Rational pow(const Rational& r, long e);

// Exact k-th root when both numerator and denominator are perfect k-th
// powers; nullopt otherwise. Negative inputs only for odd k.
std::optional<Rational> exact_root(const Rational& r, unsigned k);

}  // namespace lpcompact
