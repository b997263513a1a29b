#pragma once

#include <iosfwd>

#include "lpcompact/config.hpp"

namespace lpcompact::cli {

// Exit-code contract shared by every subcommand.
inline constexpr int kExitPass = 0;        // all indicators / audit lines hold
inline constexpr int kExitMismatch = 1;    // an indicator or audit line failed
inline constexpr int kExitConfig = 2;      // invalid configuration
inline constexpr int kExitHypothesis = 3;  // no feasible delta / no witness

struct RademacherArgs {
  unsigned members = 8;
  unsigned level = 8;
  unsigned probe_level = 3;
  Rational epsilon{9, 10};
  std::size_t samples = kDefaultProbeSamples;
  std::uint64_t seed = kDefaultProbeSeed;
  std::string out_path;  // empty: machine report goes to `machine`
};

// Reproduces the separating example: integral collapse tables, covering
// brackets, UI profile. Machine report to args.out_path (or `machine`).
int run_rademacher(const RademacherArgs& args, std::ostream& machine, std::ostream& human);

// Full inequality-chain audit: delta selection, witness search, one report
// per member per chain partition.
int run_audit(const RunConfig& cfg, std::ostream& machine, std::ostream& human);

// Conditional-expectation gap along a refinement chain.
int run_riesz_curve(const RunConfig& cfg, std::ostream& machine, std::ostream& human);

}  // namespace lpcompact::cli
