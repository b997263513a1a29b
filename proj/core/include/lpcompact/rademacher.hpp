#pragma once

#include <cstdint>
#include <vector>

#include "lpcompact/covering.hpp"
#include "lpcompact/uniform_integrability.hpp"

namespace lpcompact {

struct RademacherSpec {
  unsigned index;       // n >= 1
  unsigned resolution;  // dyadic level L >= n, so the sign runs are exact
};

// Sign function alternating +1/-1 in runs of length 2^(L-n), starting +1 on
// the leftmost run. Integrates to zero; its square is identically one.
ScalarStepFunction rademacher(const SpacePtr& dyadic_space, unsigned index);
ScalarStepFunction rademacher(const RademacherSpec& spec);

// The family {r_n e_n : 1 <= n <= count} with values in the summable
// sequences; every member has pointwise norm one.
FunctionFamily<SparseSeqVector> rademacher_l1_family(unsigned count, unsigned level);

inline constexpr std::uint64_t kDefaultProbeSeed = 0x1f2e3d4c5b6a7988ull;
inline constexpr std::size_t kDefaultProbeSamples = 512;
inline constexpr unsigned kExhaustiveProbeLevel = 4;

// Unions of level-k dyadic blocks: all 2^(2^k) of them for k <= 4,
// otherwise `samples` pseudorandom unions drawn from the seed.
std::vector<MeasurableSet> dyadic_union_probes(const SpacePtr& space, unsigned level,
                                               std::size_t samples = kDefaultProbeSamples,
                                               std::uint64_t seed = kDefaultProbeSeed);

// Everything the integral-tightness / non-total-boundedness comparison
// needs, computed exactly. The probe tables witness the collapse of the
// integral sets; the covering brackets witness that the family itself, and
// its value set, stay separated at scale epsilon.
struct ExampleReport {
  unsigned members = 0;
  unsigned level = 0;
  unsigned probe_level = 0;
  Rational epsilon;
  std::uint64_t seed = 0;
  bool exhaustive_probes = false;
  std::size_t probe_count = 0;

  std::vector<Scalar> max_integral_norm;  // per member, over all probed sets
  bool integrals_vanish_beyond_probe_level = false;

  CoveringResult family_cover;
  std::size_t value_count = 0;
  CoveringResult value_cover;

  UIProfile ui;  // exponent 1
  bool ui_tail_vanishes = false;

  bool integral_tight_indicators_pass = false;
  bool separation_matches_prediction = false;
  bool pass() const { return integral_tight_indicators_pass && separation_matches_prediction; }
};

ExampleReport example_report(unsigned members, unsigned level, unsigned probe_level,
                             const Rational& epsilon,
                             std::size_t samples = kDefaultProbeSamples,
                             std::uint64_t seed = kDefaultProbeSeed);

}  // namespace lpcompact
