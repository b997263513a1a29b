#pragma once

#include <algorithm>
#include <vector>

#include "lpcompact/step_function.hpp"

namespace lpcompact {

// Conditional expectation with respect to a finite partition: blockwise
// mean, as a step function on pi. Preserves the integral over the whole
// space and is the identity on pi-measurable functions.
template <NormedVector V>
StepFunction<V> cond_expect(const StepFunction<V>& f, const Partition& pi) {
  require_same_space(f.space(), pi.space());
  std::vector<V> vals;
  vals.reserve(pi.block_count());
  for (std::size_t b = 0; b < pi.block_count(); ++b) vals.push_back(f.mean(pi.block(b)));
  return StepFunction<V>(pi, std::move(vals));
}

namespace detail {

// Distinct block values represented inside A, in ascending block order.
template <NormedVector V>
std::vector<const V*> values_on(const StepFunction<V>& f, const MeasurableSet& A) {
  std::vector<char> seen(f.partition().block_count(), 0);
  std::vector<const V*> out;
  for (const auto atom : A.members()) {
    const std::size_t b = f.partition().block_index_of(atom);
    if (!seen[b]) {
      seen[b] = 1;
      out.push_back(&f.value_on_block(b));
    }
  }
  return out;
}

}  // namespace detail

// Essential oscillation of f on A. On an atomic space the null-set infimum
// in the definition is attained by removing nothing, so this is the max
// pairwise distance of the values f takes on A. Since f is blockwise
// constant only distinct block values enter the pairwise scan; the scan
// stops early once the diameter hits the 2*max||value|| ceiling.
template <NormedVector V>
Scalar ess_osc(const StepFunction<V>& f, const MeasurableSet& A) {
  require_same_space(f.space(), A.space());
  if (A.is_empty()) throw OscOfEmptySetError();
  const auto vals = detail::values_on(f, A);
  if (vals.size() < 2) return Scalar();

  Scalar ceiling;
  bool ceiling_exact = true;
  for (const auto* v : vals) {
    const Scalar n = v->norm();
    ceiling_exact = ceiling_exact && n.exact();
    if (ceiling < n) ceiling = n;
  }
  ceiling = ceiling + ceiling;

  Scalar best;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    for (std::size_t j = i + 1; j < vals.size(); ++j) {
      const Scalar d = (*vals[i] - *vals[j]).norm();
      if (best < d) best = d;
    }
    if (ceiling_exact && best.exact() && best == ceiling) return best;
  }
  return best;
}

// Max over atoms of A of ||f(w) - m_A(f)||; bounded by ess_osc(f, A).
template <NormedVector V>
Scalar mean_value_gap(const StepFunction<V>& f, const MeasurableSet& A) {
  require_same_space(f.space(), A.space());
  if (A.is_empty()) throw MeanOfNullSetError();
  const V m = f.mean(A);
  Scalar best;
  for (const auto* v : detail::values_on(f, A)) {
    const Scalar d = (*v - m).norm();
    if (best < d) best = d;
  }
  return best;
}

// Strict superlevel set {g > level} of a scalar step function; ties at the
// level go to the complement.
inline MeasurableSet superlevel_set(const ScalarStepFunction& g, const Rational& level) {
  const Scalar bound = Scalar::from(level);
  std::vector<std::size_t> atoms;
  for (std::size_t a = 0; a < g.space()->atom_count(); ++a) {
    if (bound < g.eval(a).scalar_value()) atoms.push_back(a);
  }
  return MeasurableSet::of(g.space(), std::move(atoms));
}

}  // namespace lpcompact
