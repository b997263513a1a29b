#pragma once

#include <vector>

#include "lpcompact/family.hpp"
#include "lpcompact/operators.hpp"

namespace lpcompact {

// sup-over-family distance to the conditional expectation, carried around
// as the exact p-th power next to its (possibly approximate) root.
struct GapValue {
  Scalar power;  // max_f ||E_pi(f) - f||_p^p
  Scalar value;  // its p-th root
};

inline Scalar lp_root(const Scalar& power, const Exponent& p) {
  if (p.integral()) return power.root(static_cast<unsigned>(p.as_long()));
  return Scalar::approx(std::pow(power.to_double(), 1.0 / p.to_double()));
}

template <NormedVector V>
GapValue riesz_gap(const FunctionFamily<V>& family, const Partition& pi, const Exponent& p) {
  require_same_space(family.space(), pi.space());
  Scalar worst;
  for (const auto& f : family.members())
    worst = max(worst, lp_distance_power(f, cond_expect(f, pi), p));
  return GapValue{worst, lp_root(worst, p)};
}

// Gap along a refinement chain (coarse to fine); rejects non-monotone
// chains. Ends at zero whenever the chain ends at the atoms partition.
template <NormedVector V>
std::vector<GapValue> riesz_gap_curve(const FunctionFamily<V>& family,
                                      const std::vector<Partition>& chain, const Exponent& p) {
  if (chain.empty()) throw InvalidArgumentError("empty partition chain");
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!is_refinement(chain[i], chain[i - 1]))
      throw InvalidArgumentError("partition chain is not monotone under refinement at step " +
                                 std::to_string(i));
  }
  std::vector<GapValue> out;
  out.reserve(chain.size());
  for (const auto& pi : chain) out.push_back(riesz_gap(family, pi, p));
  return out;
}

}  // namespace lpcompact
