#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpcompact/operators.hpp"
#include "lpcompact/rademacher.hpp"
#include "random_instances.hpp"

using namespace lpcompact;

TEST_CASE("conditional expectation on fixed examples") {
  // constants are fixed points
  const auto sp = MeasureSpace::dyadic(2);
  const auto c = StepFunction<SparseSeqVector>::constant(sp, canonical_basis(1));
  const auto pi = Partition::consecutive(sp, 2);
  const auto ec = cond_expect(c, pi);
  for (std::size_t a = 0; a < 4; ++a) CHECK(ec.eval(a) == canonical_basis(1));

  // two equal atoms with values 0 and 2 average to 1
  const auto two = MeasureSpace::with_weights({Rational(1, 2), Rational(1, 2)});
  const ScalarStepFunction f(Partition::atoms(two), {FiniteDimVector::scalar(Rational(0)),
                                                     FiniteDimVector::scalar(Rational(2))});
  const auto ef = cond_expect(f, Partition::trivial(two));
  CHECK(ef.eval(0).scalar_value().rat() == Rational(1));
  CHECK(ef.eval(1).scalar_value().rat() == Rational(1));

  // r2 averages to zero on each dyadic half
  const auto r2 = rademacher(sp, 2);
  const auto er2 = cond_expect(r2, Partition::consecutive(sp, 2));
  CHECK(er2.is_zero());
}

TEST_CASE("conditional expectation preserves the full-space integral") {
  testsupport::Rng rng(0xD001);
  for (int i = 0; i < 50; ++i) {
    const auto sp = testsupport::random_space(rng, 32);
    const auto f = testsupport::random_sparse_fn(rng, sp);
    const auto pi = testsupport::random_partition(rng, sp);
    CHECK(cond_expect(f, pi).integral_full() == f.integral_full());
  }
}

TEST_CASE("contraction, Jensen, idempotence, tower, projection") {
  testsupport::Rng rng(0xD002);
  for (int i = 0; i < 100; ++i) {
    const auto sp = testsupport::random_space(rng, 32);
    const auto f = testsupport::random_sparse_fn(rng, sp);
    const auto coarse = testsupport::random_partition(rng, sp);
    const auto fine = common_refinement(coarse, testsupport::random_partition(rng, sp));

    const auto ef = cond_expect(f, coarse);
    for (const long p : {1L, 2L, 3L}) {
      const Exponent e{p};
      const Scalar lhs = ef.lp_norm_power(e);
      const Scalar rhs = f.lp_norm_power(e);
      CHECK(lhs.exact());
      CHECK(lhs.leq(rhs));
      // Jensen holds pointwise at every atom
      const auto epow = cond_expect(f.norm_function(e), coarse);
      for (std::size_t a = 0; a < sp->atom_count(); ++a)
        CHECK(ef.eval(a).norm_power(e).leq(epow.eval(a).scalar_value()));
    }

    CHECK(cond_expect(ef, coarse) == ef);                       // idempotence
    CHECK(cond_expect(cond_expect(f, fine), coarse) == ef);     // tower
    const auto at_atoms = cond_expect(f, Partition::atoms(sp));
    for (std::size_t a = 0; a < sp->atom_count(); ++a)          // projection
      CHECK(at_atoms.eval(a) == f.eval(a));
  }
}

TEST_CASE("Markov identity pair on superlevel sets") {
  testsupport::Rng rng(0xD003);
  for (int i = 0; i < 100; ++i) {
    const auto sp = testsupport::random_space(rng, 32);
    const auto f = testsupport::random_sparse_fn(rng, sp);
    const auto pi = testsupport::random_partition(rng, sp);
    const auto g = f.norm_function(Exponent(1));  // ||f||
    const auto eg = cond_expect(g, pi);

    // a strictly positive level between the extremes of E_pi(g)
    Scalar lo = eg.eval(0).scalar_value(), hi = lo;
    for (std::size_t a = 1; a < sp->atom_count(); ++a) {
      lo = min(lo, eg.eval(a).scalar_value());
      hi = max(hi, eg.eval(a).scalar_value());
    }
    const Rational level = (lo.rat() + hi.rat() + Rational(1)) / Rational(2);
    REQUIRE(Rational(0) < level);

    const auto over = superlevel_set(eg, level);
    // the superlevel set of E_pi(g) is a union of pi blocks
    for (const auto& block : pi.blocks()) {
      const auto cut = block.intersect(over);
      CHECK((cut.is_empty() || cut == block));
    }
    const Scalar bound = scalar_integral(g, MeasurableSet::full(sp)) / Scalar::from(level);
    CHECK(Scalar::from(over.measure()).leq(bound));
    CHECK(scalar_integral(eg, over).rat() == scalar_integral(g, over).rat());
  }
}

TEST_CASE("essential oscillation") {
  const auto sp = MeasureSpace::dyadic(3);
  const auto c = StepFunction<SparseSeqVector>::constant(sp, canonical_basis(2));
  CHECK(ess_osc(c, MeasurableSet::full(sp)).rat() == Rational(0));
  CHECK_THROWS_AS(ess_osc(c, MeasurableSet::empty(sp)), OscOfEmptySetError);

  for (unsigned n = 1; n <= 3; ++n)
    CHECK(ess_osc(rademacher(sp, n), MeasurableSet::full(sp)).rat() == Rational(2));

  const auto family = rademacher_l1_family(3, 3);
  // any set meeting both sign runs of r_2 e_2
  const auto mixed = MeasurableSet::of(sp, {0, 3});
  CHECK(ess_osc(family.member(1), mixed).rat() == Rational(2));
  // a set inside one run sees no oscillation
  const auto flat = MeasurableSet::of(sp, {0, 1});
  CHECK(ess_osc(family.member(1), flat).rat() == Rational(0));
}

TEST_CASE("mean value gap examples") {
  const auto sp1 = MeasureSpace::dyadic(1);
  const auto r1 = rademacher(sp1, 1);
  const auto full = MeasurableSet::full(sp1);
  CHECK(mean_value_gap(r1, full).rat() == Rational(1));
  CHECK(ess_osc(r1, full).rat() == Rational(2));

  const auto two = MeasureSpace::with_weights({Rational(1, 2), Rational(1, 2)});
  const ScalarStepFunction f(Partition::atoms(two), {FiniteDimVector::scalar(Rational(0)),
                                                     FiniteDimVector::scalar(Rational(2))});
  CHECK(mean_value_gap(f, MeasurableSet::full(two)).rat() == Rational(1));
  CHECK(ess_osc(f, MeasurableSet::full(two)).rat() == Rational(2));

  const auto c = ScalarStepFunction::constant(two, FiniteDimVector::scalar(Rational(5)));
  CHECK(mean_value_gap(c, MeasurableSet::full(two)).rat() == Rational(0));
}

TEST_CASE("mean value gap is bounded by the oscillation") {
  testsupport::Rng rng(0xD004);
  int done = 0;
  while (done < 200) {
    const auto sp = testsupport::random_space(rng, 32);
    const auto f = testsupport::random_sparse_fn(rng, sp);
    const auto a = testsupport::random_set(rng, sp);
    if (a.is_empty()) continue;
    ++done;
    CHECK(mean_value_gap(f, a).leq(ess_osc(f, a)));
  }
}

TEST_CASE("superlevel sets use strict comparison") {
  const auto sp = MeasureSpace::dyadic(1);
  const ScalarStepFunction g(Partition::atoms(sp), {FiniteDimVector::scalar(Rational(1)),
                                                    FiniteDimVector::scalar(Rational(2))});
  CHECK(superlevel_set(g, Rational(1)).members() == std::vector<std::size_t>{1});
  CHECK(superlevel_set(g, Rational(2)).is_empty());
  CHECK(superlevel_set(g, Rational(0)).size() == 2);
}
