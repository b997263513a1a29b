#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "lpcompact/family.hpp"

namespace lpcompact {

// Covering/packing bracket for a finite point set at scale epsilon.
// Convention: covers use closed balls of radius epsilon centered at input
// points; the packing lower bound keeps points at pairwise distance
// strictly greater than 2*epsilon, so no closed ball holds two of them and
// lower <= exact <= upper is unconditional.
struct CoveringResult {
  Rational epsilon;
  std::size_t upper = 0;            // greedy set-cover size
  std::size_t lower = 0;            // greedy separated-subset size
  std::optional<std::size_t> exact; // exhaustive optimum (small sets / tight bracket)
};

inline constexpr std::size_t kExactCoverLimit = 15;

// dist_leq(i, j, t) must decide ||x_i - x_j|| <= t; it is called with
// t = epsilon and t = 2*epsilon only.
CoveringResult covering_bracket(std::size_t count,
                                const std::function<bool(std::size_t, std::size_t, const Rational&)>& dist_leq,
                                const Rational& epsilon,
                                std::size_t exact_limit = kExactCoverLimit);

template <NormedVector V>
CoveringResult covering_number(const std::vector<V>& points, const Rational& epsilon,
                               std::size_t exact_limit = kExactCoverLimit) {
  if (points.empty()) throw InvalidArgumentError("covering number of an empty point set");
  if (!(Rational(0) < epsilon)) throw InvalidArgumentError("epsilon must be positive");
  auto leq = [&points](std::size_t i, std::size_t j, const Rational& t) {
    return (points[i] - points[j]).norm().leq(Scalar::from(t));
  };
  return covering_bracket(points.size(), leq, epsilon, exact_limit);
}

// Covering of the family under the L^p distance; comparisons run on p-th
// powers so the sum/max kinds stay exact.
template <NormedVector V>
CoveringResult family_covering(const FunctionFamily<V>& family, const Exponent& p,
                               const Rational& epsilon,
                               std::size_t exact_limit = kExactCoverLimit) {
  if (!(Rational(0) < epsilon)) throw InvalidArgumentError("epsilon must be positive");
  auto leq = [&family, &p](std::size_t i, std::size_t j, const Rational& t) {
    const Scalar dist_p = lp_distance_power(family.member(i), family.member(j), p);
    return dist_p.leq(Scalar::from(t).pow(p));
  };
  return covering_bracket(family.size(), leq, epsilon, exact_limit);
}

// One probed set E: the integral points, their norms, the point-set
// diameter, and the covering bracket at epsilon.
template <NormedVector V>
struct IntegralProbeRow {
  MeasurableSet set;
  std::vector<V> points;
  std::vector<Scalar> norms;
  Scalar diameter;
  CoveringResult covering;
};

// Integral-tightness probe: for each set E the finite point set
// {integral of f over E : f in family} with its covering bracket.
template <NormedVector V>
std::vector<IntegralProbeRow<V>> integral_tightness_probe(const FunctionFamily<V>& family,
                                                          const std::vector<MeasurableSet>& sets,
                                                          const Rational& epsilon) {
  std::vector<IntegralProbeRow<V>> rows;
  rows.reserve(sets.size());
  for (const auto& E : sets) {
    IntegralProbeRow<V> row{E, {}, {}, Scalar(), CoveringResult{}};
    row.points.reserve(family.size());
    for (const auto& f : family.members()) {
      row.points.push_back(f.integral(E));
      row.norms.push_back(row.points.back().norm());
    }
    for (std::size_t i = 0; i < row.points.size(); ++i) {
      for (std::size_t j = i + 1; j < row.points.size(); ++j)
        row.diameter = max(row.diameter, (row.points[i] - row.points[j]).norm());
    }
    row.covering = covering_number(row.points, epsilon);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace lpcompact
