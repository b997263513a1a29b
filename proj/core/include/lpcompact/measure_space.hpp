#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lpcompact/rational.hpp"

namespace lpcompact {

class MeasureSpace;
using SpacePtr = std::shared_ptr<const MeasureSpace>;

// Finite atomic measure space: ordered atoms with strictly positive exact
// rational masses. Immutable after construction; shared by reference
// everywhere downstream.
class MeasureSpace {
 public:
  static constexpr unsigned kDefaultMaxDyadicLevel = 20;

  static SpacePtr with_weights(std::vector<Rational> weights,
                               std::vector<std::string> labels = {});

  // 2^level atoms of equal mass 2^-level, ordered left to right as dyadic
  // subintervals of [0,1].
  static SpacePtr dyadic(unsigned level, unsigned max_level = kDefaultMaxDyadicLevel);

  std::size_t atom_count() const { return weights_.size(); }
  const Rational& weight(std::size_t atom) const { return weights_.at(atom); }
  const Rational& total_mass() const { return total_; }
  const std::string& label(std::size_t atom) const { return labels_.at(atom); }

  // True for spaces built by dyadic(); enables dyadic partition chains.
  bool uniform_dyadic() const { return dyadic_level_.has_value(); }
  unsigned dyadic_level() const;

  friend bool structurally_equal(const MeasureSpace& a, const MeasureSpace& b) {
    return a.weights_ == b.weights_;
  }

 private:
  MeasureSpace(std::vector<Rational> weights, std::vector<std::string> labels);

  std::vector<Rational> weights_;
  std::vector<std::string> labels_;
  Rational total_;
  std::optional<unsigned> dyadic_level_;
};

inline bool same_space(const SpacePtr& a, const SpacePtr& b) {
  return a == b || (a && b && structurally_equal(*a, *b));
}

// Subset of atoms, stored as sorted unique indices. On an atomic space two
// sets are equal iff their member lists are equal; there are no nontrivial
// null sets.
class MeasurableSet {
 public:
  static MeasurableSet empty(SpacePtr space);
  static MeasurableSet full(SpacePtr space);
  static MeasurableSet of(SpacePtr space, std::vector<std::size_t> members);

  const SpacePtr& space() const { return space_; }
  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool is_empty() const { return members_.empty(); }
  bool contains(std::size_t atom) const;

  Rational measure() const;

  MeasurableSet complement() const;
  MeasurableSet union_with(const MeasurableSet& other) const;
  MeasurableSet intersect(const MeasurableSet& other) const;
  MeasurableSet minus(const MeasurableSet& other) const;

  friend bool operator==(const MeasurableSet& a, const MeasurableSet& b) {
    return same_space(a.space_, b.space_) && a.members_ == b.members_;
  }

  std::string describe() const;

 private:
  MeasurableSet(SpacePtr space, std::vector<std::size_t> members)
      : space_(std::move(space)), members_(std::move(members)) {}

  SpacePtr space_;
  std::vector<std::size_t> members_;
};

void require_same_space(const SpacePtr& a, const SpacePtr& b);

}  // namespace lpcompact
