#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lpcompact/frechet.hpp"
#include "lpcompact/uniform_integrability.hpp"

namespace lpcompact {

struct AuditLine {
  std::string label;
  Scalar lhs;
  Scalar rhs;
  bool pass;
};

// One run of the inequality chain bounding the conditional-expectation gap
// I = int ||f - E_pi(f)||^p. Consecutive lines share their middle value, so
// line k's rhs is line k+1's lhs; the final bound is I <= T*eps with
// T = (mu(Omega) + 2^{p+1} + 2) * 2^p.
struct AuditReport {
  std::size_t member = 0;
  std::string partition_label;
  Exponent p{1};
  Rational epsilon;
  Rational delta;
  Scalar gap;         // I
  Scalar constant_T;
  std::vector<AuditLine> lines;
  bool final_bound_pass = false;

  bool all_pass() const {
    if (!final_bound_pass) return false;
    for (const auto& l : lines) {
      if (!l.pass) return false;
    }
    return true;
  }
};

inline constexpr double kAuditTolerance = 1e-12;

// The five small-set quantities controlled by delta. All are evaluated
// through the fractional-greedy modulus, which dominates every atomic set
// of mass at most delta.
template <NormedVector V>
Scalar five_bound_modulus(const StepFunction<V>& f, const Exponent& p, const Partition& pi,
                          const Rational& delta) {
  const Exponent one{1};
  const auto ef = cond_expect(f, pi);
  Scalar worst = small_set_modulus(f.norm_function(one), delta);
  worst = max(worst, small_set_modulus(f.norm_function(p), delta));
  worst = max(worst, small_set_modulus(cond_expect(f.norm_function(one), pi), delta));
  worst = max(worst, small_set_modulus(cond_expect(f.norm_function(p), pi), delta));
  worst = max(worst, small_set_modulus(ef.norm_function(p), delta));
  return worst;
}

// Largest grid delta <= eps whose five-quantity modulus stays <= eps for
// every member and every partition in the test set.
template <NormedVector V>
Rational select_delta(const FunctionFamily<V>& family, const Exponent& p, const Rational& eps,
                      std::vector<Rational> delta_grid, const std::vector<Partition>& partitions) {
  if (!(Rational(0) < eps)) throw InvalidArgumentError("epsilon must be positive");
  if (partitions.empty()) throw InvalidArgumentError("delta selection needs a partition test set");
  std::sort(delta_grid.begin(), delta_grid.end());
  const Scalar cap = Scalar::from(eps);
  for (auto it = delta_grid.rbegin(); it != delta_grid.rend(); ++it) {
    const Rational& delta = *it;
    if (!(Rational(0) < delta) || eps < delta) continue;
    bool ok = true;
    for (std::size_t i = 0; ok && i < family.size(); ++i) {
      for (const auto& pi : partitions) {
        if (!five_bound_modulus(family.member(i), p, pi, delta).leq(cap, kAuditTolerance)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return delta;
  }
  throw NoFeasibleDeltaError("no grid delta in (0," + eps.to_string() +
                             "] keeps the five controlled integrals below epsilon");
}

namespace detail {

// int_S ||f - c||^p
template <NormedVector V>
Scalar power_integral_about(const StepFunction<V>& f, const V& center, const MeasurableSet& S,
                            const Exponent& p) {
  Scalar acc;
  for (const auto atom : S.members())
    acc += (f.eval(atom) - center).norm_power(p) * Scalar::from(f.space()->weight(atom));
  return acc;
}

template <NormedVector V>
Scalar power_integral(const StepFunction<V>& f, const MeasurableSet& S, const Exponent& p) {
  return power_integral_about(f, f.values()[0].zero_like(), S, p);
}

}  // namespace detail

// Evaluates every intermediate expression of the chain and asserts each
// consecutive inequality plus the final I <= T*eps. Hypothesis failures
// raise PreconditionViolatedError naming the broken hypothesis, so the
// audit doubles as a hypothesis checker.
template <NormedVector V>
AuditReport theorem_audit(const StepFunction<V>& f, const Exponent& p, const Partition& pi0,
                          const Partition& pi, const MeasurableSet& omega_f, const Rational& eps,
                          const Rational& delta) {
  require_same_space(f.space(), pi.space());
  require_same_space(f.space(), omega_f.space());

  if (!(Rational(0) < eps) || Rational(1) < eps)
    throw PreconditionViolatedError("epsilon_range", "epsilon must lie in (0,1]");
  if (!(Rational(0) < delta) || eps < delta)
    throw PreconditionViolatedError("delta_range", "delta must lie in (0,epsilon]");
  if (!is_refinement(pi, pi0))
    throw PreconditionViolatedError("partition_refines", "pi must refine pi0");

  const MeasurableSet shed = omega_f.complement();
  if (delta < shed.measure())
    throw PreconditionViolatedError("trim_mass",
                                    "mu(Omega \\ Omega_f) = " + shed.measure().to_string() +
                                        " exceeds delta = " + delta.to_string());
  const Scalar delta_s = Scalar::from(delta);
  for (std::size_t b = 0; b < pi0.block_count(); ++b) {
    const MeasurableSet cut = omega_f.intersect(pi0.block(b));
    if (cut.is_empty()) continue;
    const Scalar osc = ess_osc(f, cut);
    if (!osc.leq(delta_s, kAuditTolerance))
      throw PreconditionViolatedError("block_oscillation",
                                      "oscillation " + osc.to_string() + " on block " +
                                          std::to_string(b) + " exceeds delta");
  }
  {
    const Scalar cap = Scalar::from(eps);
    if (!five_bound_modulus(f, p, pi, delta).leq(cap, kAuditTolerance))
      throw PreconditionViolatedError("small_set_bounds",
                                      "a delta-small set breaks one of the five integral bounds");
  }

  const auto ef = cond_expect(f, pi);
  const Scalar two_p = Scalar::from(2).pow(p);
  const Scalar two_2p = two_p * two_p;
  const Scalar eps_s = Scalar::from(eps);
  const Scalar eps_p = eps_s.pow(p);
  const Scalar tail_eps = two_p * (eps_s + eps_s);  // 2^{p+1} eps

  const Scalar gap = lp_distance_power(f, ef, p);

  // pi_f: blocks of pi meeting Omega_f, with their integral data
  struct BlockData {
    MeasurableSet whole;    // K
    MeasurableSet inside;   // Omega_f cap K
    MeasurableSet outside;  // K \ Omega_f
    Rational m_in, m_out, m_all;
    V int_in, int_out;
  };
  std::vector<BlockData> pf;
  for (std::size_t b = 0; b < pi.block_count(); ++b) {
    const MeasurableSet& K = pi.block(b);
    MeasurableSet inside = omega_f.intersect(K);
    if (inside.is_empty()) continue;
    MeasurableSet outside = K.minus(omega_f);
    pf.push_back(BlockData{K, inside, outside, inside.measure(), outside.measure(), K.measure(),
                           f.integral(inside), f.integral(outside)});
  }

  // line 1: split at the trimmed set
  Scalar l1;
  for (std::size_t b = 0; b < pi.block_count(); ++b) {
    const MeasurableSet& K = pi.block(b);
    l1 += detail::power_integral_about(f, ef.value_on_block(b), omega_f.intersect(K), p);
  }
  l1 += two_p * (detail::power_integral(f, shed, p) + detail::power_integral(ef, shed, p));

  // line 2: per-block means of the trimmed pieces
  Scalar l2 = tail_eps;
  {
    Scalar inner_osc, inner_shift;
    for (const auto& d : pf) {
      const V m_in = f.mean(d.inside);
      const V m_all = f.mean(d.whole);
      inner_osc += detail::power_integral_about(f, m_in, d.inside, p);
      inner_shift += Scalar::from(d.m_in) * (m_in - m_all).norm_power(p);
    }
    l2 += two_p * inner_osc + two_p * inner_shift;
  }

  // line 3: mean difference rewritten through the block integrals
  Scalar l3 = two_p * Scalar::from(omega_f.measure()) * eps_p + tail_eps;
  for (const auto& d : pf) {
    const Rational a = Rational(1) / d.m_in - Rational(1) / d.m_all;
    const V diff = d.int_in.scaled(a) - d.int_out.scaled(Rational(1) / d.m_all);
    l3 += two_p * Scalar::from(d.m_in) * diff.norm_power(p);
  }

  // line 4: triangle inequality pushes the two integrals apart
  Scalar l4 = two_p * Scalar::from(omega_f.measure()) * eps_p + tail_eps;
  for (const auto& d : pf) {
    const Scalar mu_out_p = Scalar::from(d.m_out).pow(p);
    const Scalar mu_in_1mp =
        p.integral() ? Scalar::from(lpcompact::pow(d.m_in, 1 - p.as_long()))
                     : Scalar::approx(std::pow(d.m_in.to_double(), 1.0 - p.to_double()));
    const Scalar mu_all_p = Scalar::from(d.m_all).pow(p);
    l4 += two_2p * (mu_out_p * mu_in_1mp / mu_all_p * d.int_in.norm_power(p) +
                    Scalar::from(d.m_in) / mu_all_p * d.int_out.norm_power(p));
  }

  // line 5: Holder on both block integrals
  Scalar l5 = two_p * Scalar::from(omega_f.measure()) * eps_p + tail_eps;
  for (const auto& d : pf) {
    if (d.m_out.is_zero()) continue;
    const Scalar mu_out_p = Scalar::from(d.m_out).pow(p);
    const Scalar mu_all_p = Scalar::from(d.m_all).pow(p);
    const Scalar mu_out_pm1 =
        p.integral() ? Scalar::from(lpcompact::pow(d.m_out, p.as_long() - 1))
                     : Scalar::approx(std::pow(d.m_out.to_double(), p.to_double() - 1.0));
    l5 += two_2p * (mu_out_p / mu_all_p * detail::power_integral(f, d.inside, p) +
                    Scalar::from(d.m_in) * mu_out_pm1 / mu_all_p *
                        detail::power_integral(f, d.outside, p));
  }

  // line 6: the mixed mass product grows to max{.,.}^p
  Scalar l6 = two_p * Scalar::from(omega_f.measure()) * eps_p + tail_eps;
  for (const auto& d : pf) {
    if (d.m_out.is_zero()) continue;
    const Rational ratio = d.m_out / d.m_all;
    const Scalar ratio_pm1 =
        p.integral() ? Scalar::from(lpcompact::pow(ratio, p.as_long() - 1))
                     : Scalar::approx(std::pow(ratio.to_double(), p.to_double() - 1.0));
    const Scalar mx = Scalar::from(lpcompact::max(d.m_in, d.m_out)).pow(p);
    l6 += two_2p * (ratio_pm1 * Scalar::from(ratio) * detail::power_integral(f, d.inside, p) +
                    mx / Scalar::from(d.m_all).pow(p) * detail::power_integral(f, d.outside, p));
  }

  // line 7: both mass ratios bounded by one
  Scalar l7 = two_p * Scalar::from(omega_f.measure()) * eps_p + tail_eps;
  for (const auto& d : pf) {
    l7 += two_2p * (Scalar::from(d.m_out / d.m_all) * detail::power_integral(f, d.inside, p) +
                    detail::power_integral(f, d.outside, p));
  }

  // line 8: inner integral extended to the whole block
  Scalar l8 = two_p * Scalar::from(omega_f.measure()) * eps_p + tail_eps;
  for (const auto& d : pf) {
    l8 += two_2p * (Scalar::from(d.m_out / d.m_all) * detail::power_integral(f, d.whole, p) +
                    detail::power_integral(f, d.outside, p));
  }

  // line 9: the block sums become tail integrals over Omega \ Omega_f
  const Scalar l9 =
      two_p * Scalar::from(omega_f.measure()) * eps_p + tail_eps +
      two_2p * (scalar_integral(cond_expect(f.norm_function(p), pi), shed) +
                detail::power_integral(f, shed, p));

  // final: T eps
  const Scalar T =
      (Scalar::from(f.space()->total_mass()) + two_p * Scalar::from(2) + Scalar::from(2)) * two_p;
  const Scalar l10 = T * eps_s;

  AuditReport report;
  report.p = p;
  report.epsilon = eps;
  report.delta = delta;
  report.gap = gap;
  report.constant_T = T;
  const auto push = [&report](const char* label, const Scalar& lhs, const Scalar& rhs) {
    report.lines.push_back(AuditLine{label, lhs, rhs, lhs.leq(rhs, kAuditTolerance)});
  };
  push("gap_vs_trim_split", gap, l1);
  push("trim_split_vs_mean_split", l1, l2);
  push("mean_split_vs_mean_identity", l2, l3);
  push("mean_identity_vs_triangle", l3, l4);
  push("triangle_vs_holder", l4, l5);
  push("holder_vs_max_power", l5, l6);
  push("max_power_vs_mass_ratio", l6, l7);
  push("mass_ratio_vs_full_block", l7, l8);
  push("full_block_vs_tail", l8, l9);
  push("tail_vs_T_epsilon", l9, l10);
  report.final_bound_pass = gap.leq(l10, kAuditTolerance);
  return report;
}

struct FamilyAuditResult {
  Rational delta;
  FrechetWitness witness;
  std::vector<AuditReport> reports;  // member-major, then chain order
  bool all_pass = true;
};

// Assembled run: delta selection, witness search at delta, then one audit
// per member per chain partition refining the witness partition. Epsilon
// above 1 is clamped to 1 first.
template <NormedVector V>
FamilyAuditResult family_theorem_audit(const FunctionFamily<V>& family, const Exponent& p,
                                       const Rational& eps_in,
                                       const std::vector<Rational>& delta_grid,
                                       const std::vector<Partition>& chain,
                                       std::size_t block_budget = SIZE_MAX) {
  if (!(Rational(0) < eps_in)) throw InvalidArgumentError("epsilon must be positive");
  const Rational eps = min(eps_in, Rational(1));
  const Rational delta = select_delta(family, p, eps, delta_grid, chain);
  auto search = frechet_search(family, delta, block_budget);
  if (!search.ok()) throw FrechetSearchError(std::move(search.failures));
  const FrechetWitness& witness = *search.witness;

  std::vector<std::pair<const Partition*, std::string>> tested;
  for (std::size_t c = 0; c < chain.size(); ++c) {
    if (is_refinement(chain[c], witness.pi))
      tested.emplace_back(&chain[c], "chain[" + std::to_string(c) + "]");
  }
  if (tested.empty()) tested.emplace_back(&witness.pi, "witness");

  FamilyAuditResult out{delta, witness, {}, true};
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (const auto& [pi, label] : tested) {
      AuditReport r =
          theorem_audit(family.member(i), p, witness.pi, *pi, witness.trimmed[i], eps, delta);
      r.member = i;
      r.partition_label = label;
      out.all_pass = out.all_pass && r.all_pass();
      out.reports.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace lpcompact
