#include "lpcompact/uniform_integrability.hpp"

#include <algorithm>

namespace lpcompact {

Scalar small_set_modulus(const ScalarStepFunction& g, const Rational& delta) {
  if (delta.is_negative()) throw InvalidArgumentError("mass budget must be nonnegative");
  const auto& space = *g.space();
  std::vector<std::size_t> order(space.atom_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.eval(b).scalar_value() < g.eval(a).scalar_value();
  });

  Scalar total;
  Rational budget = delta;
  for (const auto atom : order) {
    const Scalar density = g.eval(atom).scalar_value();
    if (density < Scalar() || density.is_zero()) break;  // values sorted; rest contribute nothing
    const Rational& mass = space.weight(atom);
    if (budget <= Rational(0)) break;
    const Rational take = min(mass, budget);
    total += density * Scalar::from(take);
    budget -= take;
  }
  return total;
}

Scalar tail_integral(const ScalarStepFunction& g, const Rational& level) {
  const MeasurableSet over = superlevel_set(g, level);
  return scalar_integral(g, over);
}

}  // namespace lpcompact
