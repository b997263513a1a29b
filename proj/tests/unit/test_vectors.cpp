#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "random_instances.hpp"

using namespace lpcompact;

TEST_CASE("canonical basis vectors") {
  const auto e1 = canonical_basis(1);
  CHECK(e1.norm().rat() == Rational(1));
  CHECK(e1.entries().size() == 1);
  CHECK(e1.entries().at(1) == Rational(1));

  const auto e3 = canonical_basis(3);
  CHECK((e1 - e3).norm().rat() == Rational(2));
  CHECK((e3 + (-e3)).norm().rat() == Rational(0));
  CHECK((e3 + (-e3)).is_zero());
  CHECK_THROWS_AS(canonical_basis(0), InvalidArgumentError);
}

TEST_CASE("norm powers") {
  const auto e2 = canonical_basis(2);
  CHECK(e2.norm_power(Exponent(3)).rat() == Rational(1));
  CHECK(e2.scaled(Rational(2)).norm_power(Exponent(2)).rat() == Rational(4));
  CHECK(e2.zero_like().norm_power(Exponent(7)).rat() == Rational(0));

  const auto v = FiniteDimVector::of(NormKind::sum, {Rational(2)});
  CHECK(v.norm_power(Exponent(2)).rat() == Rational(4));
}

TEST_CASE("euclidean norms are exact on squared quantities") {
  const auto v = FiniteDimVector::of(NormKind::euclid, {Rational(3), Rational(4)});
  CHECK(v.norm_power(Exponent(2)).exact());
  CHECK(v.norm_power(Exponent(2)).rat() == Rational(25));
  CHECK(v.norm().rat() == Rational(5));  // perfect square, root stays exact
  CHECK(v.norm_power(Exponent(4)).rat() == Rational(625));
  CHECK(v.norm_power(Exponent(3)).rat() == Rational(125));

  const auto w = FiniteDimVector::of(NormKind::euclid, {Rational(1), Rational(1)});
  CHECK(w.norm_power(Exponent(2)).rat() == Rational(2));
  CHECK(!w.norm().exact());
  CHECK(!w.norm_power(Exponent(3)).exact());
  CHECK(w.norm().to_double() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("sparse vectors never store zeros") {
  std::map<unsigned, Rational> raw{{1, Rational(1)}, {2, Rational(0)}, {5, Rational(-1, 2)}};
  const SparseSeqVector v(NormKind::sum, raw);
  CHECK(v.entries().size() == 2);
  const auto cancel = v - v;
  CHECK(cancel.entries().empty());
  CHECK(cancel.is_zero());
  CHECK(v.describe() == "1:1 5:-1/2");
  CHECK_THROWS_AS(SparseSeqVector(NormKind::euclid, {}), InvalidArgumentError);
}

TEST_CASE("max-kind sparse norm") {
  std::map<unsigned, Rational> raw{{1, Rational(1, 2)}, {3, Rational(-3, 4)}};
  const SparseSeqVector v(NormKind::max, raw);
  CHECK(v.norm().rat() == Rational(3, 4));
}

namespace {

template <class V>
void check_norm_axioms(const V& a, const V& b, const Rational& alpha, double tol) {
  const Scalar na = a.norm();
  CHECK(Scalar() <= na);
  CHECK(a.is_zero() == na.is_zero());
  const Scalar scaled = a.scaled(alpha).norm();
  const Scalar expect = Scalar::from(abs(alpha)) * na;
  if (scaled.exact() && expect.exact()) {
    CHECK(scaled.rat() == expect.rat());
  } else {
    CHECK(scaled.to_double() == doctest::Approx(expect.to_double()).epsilon(tol));
  }
  CHECK((a + b).norm().leq(na + b.norm(), tol));
  // negation preserves the norm
  const Scalar nneg = (-a).norm();
  if (na.exact() && nneg.exact()) {
    CHECK(na.rat() == nneg.rat());
  } else {
    CHECK(na.to_double() == doctest::Approx(nneg.to_double()).epsilon(tol));
  }
}

}  // namespace

TEST_CASE("norm axioms hold on 500 random vectors per instance type") {
  testsupport::Rng rng(0xB001);
  for (int i = 0; i < 500; ++i) {
    const auto alpha = testsupport::random_value(rng);
    const std::size_t dim = rng.between(1, 4);
    check_norm_axioms(testsupport::random_dense(rng, NormKind::sum, dim),
                      testsupport::random_dense(rng, NormKind::sum, dim), alpha, 0.0);
    check_norm_axioms(testsupport::random_dense(rng, NormKind::max, dim),
                      testsupport::random_dense(rng, NormKind::max, dim), alpha, 0.0);
    check_norm_axioms(testsupport::random_dense(rng, NormKind::euclid, dim),
                      testsupport::random_dense(rng, NormKind::euclid, dim), alpha, 1e-12);
    check_norm_axioms(testsupport::random_sparse(rng), testsupport::random_sparse(rng), alpha,
                      0.0);
  }
}

TEST_CASE("vector rendering") {
  const auto v = FiniteDimVector::of(NormKind::sum, {Rational(1, 2), Rational(-1)});
  CHECK(v.describe() == "(1/2 -1)");
  CHECK(canonical_basis(4).describe() == "4:1");
  CHECK(SparseSeqVector(NormKind::sum).describe() == "0");
}

TEST_CASE("kind and dimension mismatches are rejected") {
  const auto a = FiniteDimVector::of(NormKind::sum, {Rational(1)});
  const auto b = FiniteDimVector::of(NormKind::max, {Rational(1)});
  const auto c = FiniteDimVector::of(NormKind::sum, {Rational(1), Rational(2)});
  CHECK_THROWS_AS(a + b, InvalidArgumentError);
  CHECK_THROWS_AS(a + c, InvalidArgumentError);
  const SparseSeqVector s(NormKind::sum), m(NormKind::max);
  CHECK_THROWS_AS(s + m, InvalidArgumentError);
}
