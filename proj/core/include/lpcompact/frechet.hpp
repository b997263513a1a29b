#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lpcompact/family.hpp"
#include "lpcompact/operators.hpp"

namespace lpcompact {

// One partition for the whole family plus a trimmed set per member: the
// witness data of the oscillation-restriction condition. Valid when every
// member loses mass at most epsilon and oscillates at most epsilon on each
// trimmed block.
struct FrechetWitness {
  Rational epsilon;
  Partition pi;
  std::vector<MeasurableSet> trimmed;  // one per family member
};

struct FrechetViolation {
  enum class Kind { mass, oscillation };
  Kind kind;
  std::size_t member;
  std::size_t block;  // meaningful for oscillation violations
  Scalar value;
};

struct FrechetVerifyResult {
  bool ok;
  std::optional<FrechetViolation> violation;  // first in (member, block) order
};

// Per-member failure data when the greedy trim runs out of mass budget.
struct FrechetCertificate {
  std::size_t member;
  std::size_t block;
  Scalar residual_oscillation;
  Rational mass_spent;
};

struct FrechetSearchResult {
  Partition candidate;
  std::optional<FrechetWitness> witness;
  std::vector<FrechetCertificate> failures;
  bool ok() const { return witness.has_value(); }
};

struct FrechetSearchError : Error {
  std::vector<FrechetCertificate> certificates;
  explicit FrechetSearchError(std::vector<FrechetCertificate> certs)
      : Error("no oscillation witness within the block budget (" +
              std::to_string(certs.size()) + " member(s) failed)"),
        certificates(std::move(certs)) {}
};

template <NormedVector V>
FrechetVerifyResult frechet_verify(const FunctionFamily<V>& family, const FrechetWitness& w) {
  require_same_space(family.space(), w.pi.space());
  if (w.trimmed.size() != family.size())
    throw InvalidArgumentError("witness needs one trimmed set per member");
  const Scalar bound = Scalar::from(w.epsilon);
  const MeasurableSet full = MeasurableSet::full(family.space());
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& omega = w.trimmed[i];
    if (Scalar::from(full.minus(omega).measure()) > bound)
      return {false, FrechetViolation{FrechetViolation::Kind::mass, i, 0,
                                      Scalar::from(full.minus(omega).measure())}};
    for (std::size_t b = 0; b < w.pi.block_count(); ++b) {
      const MeasurableSet cut = omega.intersect(w.pi.block(b));
      if (cut.is_empty()) continue;
      const Scalar osc = ess_osc(family.member(i), cut);
      if (!osc.leq(bound))
        return {false, FrechetViolation{FrechetViolation::Kind::oscillation, i, b, osc}};
    }
  }
  return {true, std::nullopt};
}

namespace detail {

// Merges adjacent blocks of smallest combined measure until the partition
// fits the budget.
Partition truncate_partition(const Partition& p, std::size_t budget);

struct TrimOutcome {
  bool ok = false;
  std::optional<MeasurableSet> kept;
  Rational spent;
  std::size_t block = 0;  // block of the residual oscillation on failure
  Scalar residual;
};

// Greedy per-member trim: repeatedly locate the block with the largest
// remaining oscillation and delete the lightest value-group realizing it,
// until oscillation <= eps everywhere or the mass budget eps is exhausted.
template <NormedVector V>
TrimOutcome trim_member(const StepFunction<V>& f, const Partition& pi, const Rational& eps) {
  const auto& space = f.space();
  std::vector<char> removed(space->atom_count(), 0);
  Rational spent(0);
  const Scalar bound = Scalar::from(eps);

  struct Group {
    const V* value;
    std::vector<std::size_t> atoms;
    Rational mass;
  };
  auto groups_of = [&](std::size_t block) {
    std::vector<Group> gs;
    for (const auto atom : pi.block(block).members()) {
      if (removed[atom]) continue;
      const V& v = f.eval(atom);
      auto it = std::find_if(gs.begin(), gs.end(), [&](const Group& g) { return *g.value == v; });
      if (it == gs.end()) {
        gs.push_back(Group{&v, {atom}, space->weight(atom)});
      } else {
        it->atoms.push_back(atom);
        it->mass += space->weight(atom);
      }
    }
    return gs;
  };

  TrimOutcome out;
  while (true) {
    Scalar worst;
    std::size_t worst_block = pi.block_count();
    for (std::size_t b = 0; b < pi.block_count(); ++b) {
      const auto gs = groups_of(b);
      for (std::size_t i = 0; i < gs.size(); ++i) {
        for (std::size_t j = i + 1; j < gs.size(); ++j) {
          const Scalar d = (*gs[i].value - *gs[j].value).norm();
          if (worst < d) {
            worst = d;
            worst_block = b;
          }
        }
      }
    }
    if (worst.leq(bound)) break;

    // pick the lightest group attaining the block diameter
    const auto gs = groups_of(worst_block);
    std::size_t pick = gs.size();
    for (std::size_t i = 0; i < gs.size(); ++i) {
      Scalar contribution;
      for (std::size_t j = 0; j < gs.size(); ++j) {
        if (i != j) contribution = max(contribution, (*gs[i].value - *gs[j].value).norm());
      }
      if (contribution == worst && (pick == gs.size() || gs[i].mass < gs[pick].mass))
        pick = i;
    }
    if (spent + gs[pick].mass > eps) {
      out.ok = false;
      out.block = worst_block;
      out.residual = worst;
      out.spent = spent;
      std::vector<std::size_t> kept_atoms;
      for (std::size_t a = 0; a < space->atom_count(); ++a) {
        if (!removed[a]) kept_atoms.push_back(a);
      }
      out.kept = MeasurableSet::of(space, std::move(kept_atoms));
      return out;
    }
    for (const auto atom : gs[pick].atoms) removed[atom] = 1;
    spent += gs[pick].mass;
  }

  std::vector<std::size_t> kept_atoms;
  for (std::size_t a = 0; a < space->atom_count(); ++a) {
    if (!removed[a]) kept_atoms.push_back(a);
  }
  out.ok = true;
  out.kept = MeasurableSet::of(space, std::move(kept_atoms));
  out.spent = spent;
  return out;
}

}  // namespace detail

// Greedy witness construction. Candidate partitions, in order: the full
// common refinement of the member partitions when it fits the budget, the
// finest dyadic prefix fitting the budget (uniform dyadic spaces), and the
// common refinement truncated by merging light adjacent blocks. The first
// candidate whose trims all succeed is re-verified and returned; otherwise
// the certificates of the first attempted candidate are reported.
template <NormedVector V>
FrechetSearchResult frechet_search(const FunctionFamily<V>& family, const Rational& epsilon,
                                   std::size_t block_budget) {
  if (block_budget < 1) throw InvalidArgumentError("block budget must be at least 1");
  if (!(Rational(0) < epsilon)) throw InvalidArgumentError("epsilon must be positive");

  Partition joint = family.member(0).partition();
  for (std::size_t i = 1; i < family.size(); ++i)
    joint = common_refinement(joint, family.member(i).partition());

  std::vector<Partition> candidates;
  if (joint.block_count() <= block_budget) {
    candidates.push_back(joint);
  } else {
    const auto& space = family.space();
    if (space->uniform_dyadic()) {
      unsigned level = 0;
      while ((std::size_t{1} << (level + 1)) <= block_budget && level + 1 <= space->dyadic_level())
        ++level;
      candidates.push_back(Partition::consecutive(space, std::size_t{1} << level));
    }
    candidates.push_back(detail::truncate_partition(joint, block_budget));
  }

  std::optional<FrechetSearchResult> first_failure;
  for (const auto& pi : candidates) {
    FrechetSearchResult attempt{pi, std::nullopt, {}};
    std::vector<MeasurableSet> trimmed;
    for (std::size_t i = 0; i < family.size(); ++i) {
      auto outcome = detail::trim_member(family.member(i), pi, epsilon);
      if (outcome.ok) {
        trimmed.push_back(std::move(*outcome.kept));
      } else {
        attempt.failures.push_back(
            FrechetCertificate{i, outcome.block, outcome.residual, outcome.spent});
      }
    }
    if (attempt.failures.empty()) {
      FrechetWitness w{epsilon, pi, std::move(trimmed)};
      const auto check = frechet_verify(family, w);
      if (!check.ok) throw Error("internal: greedy witness failed re-verification");
      attempt.witness = std::move(w);
      return attempt;
    }
    if (!first_failure) first_failure = std::move(attempt);
  }
  return *first_failure;
}

}  // namespace lpcompact
