#pragma once

#include <utility>
#include <vector>

#include "lpcompact/partition.hpp"
#include "lpcompact/vectors.hpp"

namespace lpcompact {

// Vector-valued simple function: one value per partition block. Integrals,
// means and L^p norms are finite sums and stay exact whenever the value
// arithmetic does. Binary operations move to the common refinement and
// never coarsen.
template <NormedVector V>
class StepFunction {
 public:
  StepFunction(Partition partition, std::vector<V> values)
      : partition_(std::move(partition)), values_(std::move(values)) {
    if (values_.size() != partition_.block_count())
      throw InvalidArgumentError("need exactly one value per partition block");
  }

  static StepFunction constant(SpacePtr space, V value) {
    Partition p = Partition::trivial(std::move(space));
    return StepFunction(std::move(p), std::vector<V>{std::move(value)});
  }

  const SpacePtr& space() const { return partition_.space(); }
  const Partition& partition() const { return partition_; }
  const std::vector<V>& values() const { return values_; }
  const V& value_on_block(std::size_t block) const { return values_.at(block); }

  const V& eval(std::size_t atom) const {
    if (atom >= space()->atom_count())
      throw InvalidArgumentError("atom index " + std::to_string(atom) + " out of range");
    return values_[partition_.block_index_of(atom)];
  }

  // Bochner integral over E: sum of value_K * mu(K cap E).
  V integral(const MeasurableSet& E) const {
    require_same_space(space(), E.space());
    V acc = values_[0].zero_like();
    for (std::size_t b = 0; b < values_.size(); ++b) {
      const Rational m = partition_.block(b).intersect(E).measure();
      if (!m.is_zero()) acc = acc + values_[b].scaled(m);
    }
    return acc;
  }

  V integral_full() const {
    V acc = values_[0].zero_like();
    for (std::size_t b = 0; b < values_.size(); ++b)
      acc = acc + values_[b].scaled(partition_.block(b).measure());
    return acc;
  }

  V mean(const MeasurableSet& A) const {
    require_same_space(space(), A.space());
    if (A.is_empty()) throw MeanOfNullSetError();  // positive atoms: null iff empty
    return integral(A).scaled(Rational(1) / A.measure());
  }

  // ||f||_p^p = sum over blocks of ||value||^p * mu(block).
  Scalar lp_norm_power(const Exponent& p) const {
    Scalar acc;
    for (std::size_t b = 0; b < values_.size(); ++b)
      acc += values_[b].norm_power(p) * Scalar::from(partition_.block(b).measure());
    return acc;
  }

  // Same partition, blockwise ||value||^p, as a scalar-valued step function.
  StepFunction<FiniteDimVector> norm_function(const Exponent& p) const {
    std::vector<FiniteDimVector> vals;
    vals.reserve(values_.size());
    for (const auto& v : values_) vals.push_back(FiniteDimVector::scalar(v.norm_power(p)));
    return StepFunction<FiniteDimVector>(partition_, std::move(vals));
  }

  // Re-expresses the function on a finer partition; values are unchanged.
  StepFunction refined_to(const Partition& finer) const {
    if (!is_refinement(finer, partition_))
      throw InvalidArgumentError("target partition does not refine the function's partition");
    std::vector<V> vals;
    vals.reserve(finer.block_count());
    for (std::size_t b = 0; b < finer.block_count(); ++b)
      vals.push_back(values_[partition_.block_index_of(finer.block(b).members().front())]);
    return StepFunction(finer, std::move(vals));
  }

  bool is_zero() const {
    for (const auto& v : values_) {
      if (!v.is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const StepFunction& a, const StepFunction& b) {
    return a.partition_ == b.partition_ && a.values_ == b.values_;
  }

 private:
  Partition partition_;
  std::vector<V> values_;
};

// alpha*f + beta*g on the common refinement of the two partitions.
template <NormedVector V>
StepFunction<V> combine(const StepFunction<V>& f, const StepFunction<V>& g,
                        const Rational& alpha, const Rational& beta) {
  require_same_space(f.space(), g.space());
  const Partition joint = common_refinement(f.partition(), g.partition());
  std::vector<V> vals;
  vals.reserve(joint.block_count());
  for (std::size_t b = 0; b < joint.block_count(); ++b) {
    const std::size_t atom = joint.block(b).members().front();
    vals.push_back(f.eval(atom).scaled(alpha) + g.eval(atom).scaled(beta));
  }
  return StepFunction<V>(joint, std::move(vals));
}

// L^p distance raised to the p: ||f - g||_p^p.
template <NormedVector V>
Scalar lp_distance_power(const StepFunction<V>& f, const StepFunction<V>& g, const Exponent& p) {
  return combine(f, g, Rational(1), Rational(-1)).lp_norm_power(p);
}

using ScalarStepFunction = StepFunction<FiniteDimVector>;

// Integral of a scalar-valued (dimension-1) step function over E.
inline Scalar scalar_integral(const ScalarStepFunction& f, const MeasurableSet& E) {
  return f.integral(E).scalar_value();
}

}  // namespace lpcompact
