#include "lpcompact/rational.hpp"

#include <algorithm>
#include <cctype>

namespace lpcompact {

std::string Rational::to_string() const {
  std::string s = num().str();
  if (!is_integer()) {
    s += '/';
    s += den().str();
  }
  return s;
}

std::string Rational::to_decimal(unsigned digits) const {
  Int scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  Int n = num() * scale;
  const Int d = den();
  const bool neg = n < 0;
  if (neg) n = -n;
  Int q = n / d;
  const Int r = n % d;
  if (2 * r >= d) ++q;  // round half away from zero
  std::string body = q.str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, ".");
  if (neg && q != 0) body.insert(0, "-");
  return body;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return std::nullopt;

  bool neg = false;
  if (text.front() == '+' || text.front() == '-') {
    neg = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;

  const auto all_digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c));
    });
  };

  Rational out;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num_part = trim(text.substr(0, slash));
    const auto den_part = trim(text.substr(slash + 1));
    if (!all_digits(num_part) || !all_digits(den_part)) return std::nullopt;
    const Int den{std::string(den_part)};
    if (den == 0) return std::nullopt;
    out = Rational(Int(std::string(num_part)), den);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (!all_digits(whole) && !whole.empty()) return std::nullopt;
    if (!all_digits(frac)) return std::nullopt;
    Int scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const Int whole_i = whole.empty() ? Int(0) : Int(std::string(whole));
    out = Rational(whole_i * scale + Int(std::string(frac)), scale);
  } else {
    if (!all_digits(text)) return std::nullopt;
    out = Rational(Int(std::string(text)), Int(1));
  }
  return neg ? -out : out;
}

Rational pow(const Rational& r, long e) {
  if (e < 0) {
    if (r.is_zero()) throw InvalidArgumentError("zero to a negative power");
    return pow(Rational(1) / r, -e);
  }
  Rational base = r;
  Rational acc = 1;
  for (auto k = static_cast<unsigned long>(e); k > 0; k >>= 1) {
    if (k & 1) acc *= base;
    base *= base;
  }
  return acc;
}

namespace {

std::optional<Int> integer_root(const Int& x, unsigned k) {
  if (x < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = integer_root(-x, k);
    if (!r) return std::nullopt;
    return -*r;
  }
  if (x == 0 || x == 1 || k == 1) return x;
  // binary search for floor root, then check exactness
  Int lo = 0, hi = x;
  while (lo < hi) {
    const Int mid = (lo + hi + 1) / 2;
    Int p = 1;
    bool over = false;
    for (unsigned i = 0; i < k; ++i) {
      p *= mid;
      if (p > x) { over = true; break; }
    }
    if (over) hi = mid - 1; else lo = mid;
  }
  Int p = 1;
  for (unsigned i = 0; i < k; ++i) p *= lo;
  if (p == x) return lo;
  return std::nullopt;
}

}  // namespace

std::optional<Rational> exact_root(const Rational& r, unsigned k) {
  if (k == 0) throw InvalidArgumentError("zeroth root");
  const auto n = integer_root(r.num(), k);
  if (!n) return std::nullopt;
  const auto d = integer_root(r.den(), k);
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

}  // namespace lpcompact
