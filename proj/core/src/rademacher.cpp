#include "lpcompact/rademacher.hpp"

#include <algorithm>
#include <random>

namespace lpcompact {

ScalarStepFunction rademacher(const SpacePtr& dyadic_space, unsigned index) {
  if (index < 1) throw InvalidArgumentError("Rademacher index starts at 1");
  const unsigned level = dyadic_space->dyadic_level();
  if (level < index)
    throw InvalidArgumentError("resolution level " + std::to_string(level) +
                               " is below Rademacher index " + std::to_string(index));
  const std::size_t runs = std::size_t{1} << index;
  Partition pi = Partition::consecutive(dyadic_space, runs);
  std::vector<FiniteDimVector> vals;
  vals.reserve(runs);
  for (std::size_t b = 0; b < runs; ++b)
    vals.push_back(FiniteDimVector::scalar(Rational(b % 2 == 0 ? 1 : -1)));
  return {std::move(pi), std::move(vals)};
}

ScalarStepFunction rademacher(const RademacherSpec& spec) {
  return rademacher(MeasureSpace::dyadic(spec.resolution), spec.index);
}

FunctionFamily<SparseSeqVector> rademacher_l1_family(unsigned count, unsigned level) {
  if (count < 1) throw InvalidArgumentError("family needs at least one member");
  if (level < count)
    throw InvalidArgumentError("resolution level " + std::to_string(level) +
                               " is below member count " + std::to_string(count));
  const SpacePtr space = MeasureSpace::dyadic(level);
  std::vector<StepFunction<SparseSeqVector>> members;
  members.reserve(count);
  for (unsigned n = 1; n <= count; ++n) {
    const std::size_t runs = std::size_t{1} << n;
    Partition pi = Partition::consecutive(space, runs);
    const SparseSeqVector e = canonical_basis(n);
    std::vector<SparseSeqVector> vals;
    vals.reserve(runs);
    for (std::size_t b = 0; b < runs; ++b) vals.push_back(b % 2 == 0 ? e : -e);
    members.emplace_back(std::move(pi), std::move(vals));
  }
  return FunctionFamily<SparseSeqVector>(std::move(members));
}

std::vector<MeasurableSet> dyadic_union_probes(const SpacePtr& space, unsigned level,
                                               std::size_t samples, std::uint64_t seed) {
  const std::size_t blocks = std::size_t{1} << level;
  const Partition base = Partition::consecutive(space, blocks);
  std::vector<MeasurableSet> out;

  auto union_of_mask = [&](std::uint64_t mask) {
    std::vector<std::size_t> atoms;
    for (std::size_t b = 0; b < blocks; ++b) {
      if (mask >> b & 1) {
        const auto& m = base.block(b).members();
        atoms.insert(atoms.end(), m.begin(), m.end());
      }
    }
    return MeasurableSet::of(space, std::move(atoms));
  };

  if (level <= kExhaustiveProbeLevel) {
    const std::uint64_t total = std::uint64_t{1} << blocks;
    out.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) out.push_back(union_of_mask(mask));
    return out;
  }
  std::mt19937_64 rng(seed);
  out.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    std::uint64_t mask = 0;
    for (std::size_t b = 0; b < blocks; ++b) mask |= std::uint64_t{rng() & 1} << b;
    out.push_back(union_of_mask(mask));
  }
  return out;
}

ExampleReport example_report(unsigned members, unsigned level, unsigned probe_level,
                             const Rational& epsilon, std::size_t samples, std::uint64_t seed) {
  if (level < members)
    throw InvalidArgumentError("resolution level must be at least the member count");
  if (probe_level > level)
    throw InvalidArgumentError("probe level cannot exceed the resolution level");
  if (!(Rational(0) < epsilon)) throw InvalidArgumentError("epsilon must be positive");

  const auto family = rademacher_l1_family(members, level);
  const auto& space = family.space();

  ExampleReport rep;
  rep.members = members;
  rep.level = level;
  rep.probe_level = probe_level;
  rep.epsilon = epsilon;
  rep.seed = seed;
  rep.exhaustive_probes = probe_level <= kExhaustiveProbeLevel;
  const auto probes = dyadic_union_probes(space, probe_level, samples, seed);
  rep.probe_count = probes.size();

  // probes are unions of level-k blocks: precompute the per-member block
  // integrals once and assemble each union from them
  const Partition base = Partition::consecutive(space, std::size_t{1} << probe_level);
  std::vector<std::vector<SparseSeqVector>> block_integral(members);
  for (unsigned n = 0; n < members; ++n) {
    block_integral[n].reserve(base.block_count());
    for (std::size_t b = 0; b < base.block_count(); ++b)
      block_integral[n].push_back(family.member(n).integral(base.block(b)));
  }
  rep.max_integral_norm.assign(members, Scalar());
  for (const auto& E : probes) {
    for (unsigned n = 0; n < members; ++n) {
      SparseSeqVector acc(NormKind::sum);
      for (std::size_t b = 0; b < base.block_count(); ++b) {
        if (E.contains(base.block(b).members().front())) acc = acc + block_integral[n][b];
      }
      rep.max_integral_norm[n] = max(rep.max_integral_norm[n], acc.norm());
    }
  }
  rep.integrals_vanish_beyond_probe_level = true;
  for (unsigned n = probe_level; n < members; ++n) {
    // member index n is r_{n+1} e_{n+1}; indices above the probe level must
    // cancel exactly on every probed union
    if (!rep.max_integral_norm[n].is_zero()) rep.integrals_vanish_beyond_probe_level = false;
  }

  rep.family_cover = family_covering(family, Exponent(1), epsilon);

  std::vector<SparseSeqVector> values;
  for (unsigned n = 0; n < members; ++n) {
    for (const auto& v : family.member(n).values()) {
      if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
    }
  }
  rep.value_count = values.size();
  rep.value_cover = covering_number(values, epsilon);

  std::vector<Rational> delta_grid{min(epsilon, space->total_mass())};
  if (delta_grid.front() < space->total_mass()) delta_grid.push_back(space->total_mass());
  rep.ui = ui_profile(family, Exponent(1), {Rational(1), Rational(2), Rational(4)},
                      delta_grid);
  rep.ui_tail_vanishes = true;
  for (const auto& [m, t] : rep.ui.tail) {
    if (Rational(1) <= m && !t.is_zero()) rep.ui_tail_vanishes = false;
  }

  rep.integral_tight_indicators_pass =
      rep.integrals_vanish_beyond_probe_level && rep.ui_tail_vanishes;

  // pairwise distances in the family and in its value set are exactly 2
  const auto matches = [](const CoveringResult& c, std::size_t want) {
    if (c.exact) return *c.exact == want;
    return c.lower == want && c.upper == want;
  };
  const std::size_t family_pred = epsilon < Rational(2) ? members : 1;
  const std::size_t value_pred = epsilon < Rational(2) ? 2 * std::size_t{members} : 1;
  rep.separation_matches_prediction = rep.value_count == 2 * std::size_t{members} &&
                                      matches(rep.family_cover, family_pred) &&
                                      matches(rep.value_cover, value_pred);
  return rep;
}

}  // namespace lpcompact
