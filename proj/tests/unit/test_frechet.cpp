#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpcompact/frechet.hpp"
#include "lpcompact/rademacher.hpp"
#include "random_instances.hpp"

using namespace lpcompact;

TEST_CASE("verification accepts the blockwise-constant witness") {
  const auto family = rademacher_l1_family(3, 3);
  Partition joint = family.member(0).partition();
  for (std::size_t i = 1; i < family.size(); ++i)
    joint = common_refinement(joint, family.member(i).partition());
  const auto full = MeasurableSet::full(family.space());
  const FrechetWitness w{Rational(1, 8), joint, {full, full, full}};
  CHECK(frechet_verify(family, w).ok);
}

TEST_CASE("verification reports the first oscillation violation") {
  const auto family = rademacher_l1_family(2, 2);
  const auto full = MeasurableSet::full(family.space());
  // level-1 blocks: member r_2 e_2 oscillates 2 on each half
  const FrechetWitness w{Rational(1), Partition::consecutive(family.space(), 2), {full, full}};
  const auto res = frechet_verify(family, w);
  CHECK(!res.ok);
  REQUIRE(res.violation.has_value());
  CHECK(res.violation->kind == FrechetViolation::Kind::oscillation);
  CHECK(res.violation->member == 1);
  CHECK(res.violation->block == 0);
  CHECK(res.violation->value.rat() == Rational(2));
}

TEST_CASE("verification reports mass violations") {
  const auto sp = MeasureSpace::dyadic(2);
  const FunctionFamily<FiniteDimVector> family({rademacher(sp, 1)});
  const auto small = MeasurableSet::of(sp, {0});  // sheds 3/4
  const FrechetWitness w{Rational(1, 2), Partition::trivial(sp), {small}};
  const auto res = frechet_verify(family, w);
  CHECK(!res.ok);
  CHECK(res.violation->kind == FrechetViolation::Kind::mass);
}

TEST_CASE("constant families admit the trivial witness") {
  const auto sp = MeasureSpace::dyadic(2);
  const FunctionFamily<SparseSeqVector> consts(
      {StepFunction<SparseSeqVector>::constant(sp, canonical_basis(1))});
  const auto res = frechet_search(consts, Rational(1, 100), 1);
  REQUIRE(res.ok());
  CHECK(res.witness->pi.block_count() == 1);
  CHECK(res.witness->trimmed[0] == MeasurableSet::full(sp));
  CHECK(frechet_verify(consts, *res.witness).ok);
}

TEST_CASE("a big enough budget yields the zero-oscillation witness") {
  const auto family = rademacher_l1_family(4, 4);
  const auto res = frechet_search(family, Rational(1, 4), 16);
  REQUIRE(res.ok());
  for (const auto& t : res.witness->trimmed) CHECK(t.measure() == Rational(1));
  for (std::size_t b = 0; b < res.witness->pi.block_count(); ++b) {
    for (std::size_t i = 0; i < family.size(); ++i)
      CHECK(ess_osc(family.member(i), res.witness->pi.block(b)).is_zero());
  }
}

TEST_CASE("tight budgets fail exactly on the fast-oscillating members") {
  // with 4 blocks the first two sign functions are blockwise constant; the
  // faster ones hold both signs in every block and trimming them costs 1/2
  const auto family = rademacher_l1_family(4, 4);
  const auto res = frechet_search(family, Rational(1, 4), 4);
  CHECK(!res.ok());
  REQUIRE(res.failures.size() == 2);
  CHECK(res.failures[0].member == 2);
  CHECK(res.failures[1].member == 3);
  for (const auto& c : res.failures) {
    CHECK(c.residual_oscillation.rat() == Rational(2));
    CHECK(c.mass_spent <= Rational(1, 4));
  }
  CHECK(res.candidate.block_count() == 4);
}

TEST_CASE("search is deterministic") {
  const auto family = rademacher_l1_family(4, 4);
  const auto a = frechet_search(family, Rational(1, 4), 4);
  const auto b = frechet_search(family, Rational(1, 4), 4);
  REQUIRE(a.failures.size() == b.failures.size());
  for (std::size_t i = 0; i < a.failures.size(); ++i) {
    CHECK(a.failures[i].member == b.failures[i].member);
    CHECK(a.failures[i].block == b.failures[i].block);
    CHECK(a.failures[i].mass_spent == b.failures[i].mass_spent);
  }
  CHECK(a.candidate == b.candidate);
}

TEST_CASE("trims remove the light sign group first") {
  // one member, nonuniform masses: the minority side costs less
  const auto sp = MeasureSpace::with_weights(
      {Rational(3, 8), Rational(1, 8), Rational(3, 8), Rational(1, 8)});
  const StepFunction<SparseSeqVector> f(
      Partition::atoms(sp),
      {canonical_basis(1), -canonical_basis(1), canonical_basis(1), -canonical_basis(1)});
  const FunctionFamily<SparseSeqVector> family({f});
  // budget 1/4 is exactly the mass of the two light atoms
  const auto res = frechet_search(family, Rational(1, 4), 1);
  REQUIRE(res.ok());
  CHECK(res.witness->trimmed[0].measure() == Rational(3, 4));
  CHECK(res.witness->trimmed[0].members() == std::vector<std::size_t>{0, 2});
}

TEST_CASE("search input validation") {
  const auto family = rademacher_l1_family(2, 2);
  CHECK_THROWS_AS(frechet_search(family, Rational(1, 4), 0), InvalidArgumentError);
  CHECK_THROWS_AS(frechet_search(family, Rational(0), 4), InvalidArgumentError);
}
