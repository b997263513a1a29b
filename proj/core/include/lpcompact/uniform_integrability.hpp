#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "lpcompact/family.hpp"
#include "lpcompact/operators.hpp"

namespace lpcompact {

// sup over {E : mu(E) <= delta} of the integral of a nonnegative scalar
// step function, computed by the fractional-greedy rule: atoms sorted by
// value descending (ties by ascending index), the mass budget filled in
// order, the boundary atom counted proportionally. Exact for the nonatomic
// relaxation and an upper bound over atomic sets; the exhaustive atomic
// optimum is a test oracle.
Scalar small_set_modulus(const ScalarStepFunction& g, const Rational& delta);

// Tail sup: integral of g over the strict superlevel set {g > level}.
Scalar tail_integral(const ScalarStepFunction& g, const Rational& level);

struct UIProfile {
  Exponent p{1};
  // (M, sup_f int_{||f||^p > M} ||f||^p); nonincreasing in M
  std::vector<std::pair<Rational, Scalar>> tail;
  // (delta, sup_f modulus); nondecreasing, equals sup_f ||f||_p^p at full mass
  std::vector<std::pair<Rational, Scalar>> modulus;
};

template <NormedVector V>
UIProfile ui_profile(const FunctionFamily<V>& family, const Exponent& p,
                     const std::vector<Rational>& m_grid,
                     const std::vector<Rational>& delta_grid) {
  std::vector<ScalarStepFunction> powers;
  powers.reserve(family.size());
  for (const auto& f : family.members()) powers.push_back(f.norm_function(p));

  UIProfile out{p, {}, {}};
  for (const auto& m : m_grid) {
    Scalar worst;
    for (const auto& g : powers) worst = max(worst, tail_integral(g, m));
    out.tail.emplace_back(m, worst);
  }
  for (const auto& d : delta_grid) {
    Scalar worst;
    for (const auto& g : powers) worst = max(worst, small_set_modulus(g, d));
    out.modulus.emplace_back(d, worst);
  }
  return out;
}

}  // namespace lpcompact
