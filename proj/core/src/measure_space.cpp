#include "lpcompact/measure_space.hpp"

#include <algorithm>

#include "lpcompact/errors.hpp"

namespace lpcompact {

MeasureSpace::MeasureSpace(std::vector<Rational> weights, std::vector<std::string> labels)
    : weights_(std::move(weights)), labels_(std::move(labels)), total_(0) {
  if (weights_.empty()) throw InvalidArgumentError("a measure space needs at least one atom");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!(Rational(0) < weights_[i]))
      throw InvalidArgumentError("atom " + std::to_string(i) + " has non-positive mass");
    total_ += weights_[i];
  }
  if (labels_.empty()) {
    labels_.reserve(weights_.size());
    for (std::size_t i = 0; i < weights_.size(); ++i) labels_.push_back("a" + std::to_string(i));
  } else if (labels_.size() != weights_.size()) {
    throw InvalidArgumentError("label count does not match atom count");
  }
}

SpacePtr MeasureSpace::with_weights(std::vector<Rational> weights, std::vector<std::string> labels) {
  return SpacePtr(new MeasureSpace(std::move(weights), std::move(labels)));
}

SpacePtr MeasureSpace::dyadic(unsigned level, unsigned max_level) {
  if (level > max_level)
    throw InvalidArgumentError("dyadic level " + std::to_string(level) +
                               " exceeds maximum " + std::to_string(max_level));
  const std::size_t n = std::size_t{1} << level;
  const Rational w(Int(1), Int(std::size_t{1} << level));
  std::vector<Rational> weights(n, w);
  std::vector<std::string> labels;
  labels.reserve(n);
  const std::string den = std::to_string(n);
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back("[" + std::to_string(i) + "/" + den + "," + std::to_string(i + 1) + "/" + den + ")");
  auto* raw = new MeasureSpace(std::move(weights), std::move(labels));
  raw->dyadic_level_ = level;
  return SpacePtr(raw);
}

unsigned MeasureSpace::dyadic_level() const {
  if (!dyadic_level_) throw InvalidArgumentError("space was not built as a dyadic space");
  return *dyadic_level_;
}

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
  if (!same_space(a, b)) throw SpaceMismatchError();
}

MeasurableSet MeasurableSet::empty(SpacePtr space) { return {std::move(space), {}}; }

MeasurableSet MeasurableSet::full(SpacePtr space) {
  std::vector<std::size_t> all(space->atom_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return {std::move(space), std::move(all)};
}

MeasurableSet MeasurableSet::of(SpacePtr space, std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && members.back() >= space->atom_count())
    throw InvalidArgumentError("atom index " + std::to_string(members.back()) +
                               " out of range for this space");
  return {std::move(space), std::move(members)};
}

bool MeasurableSet::contains(std::size_t atom) const {
  return std::binary_search(members_.begin(), members_.end(), atom);
}

Rational MeasurableSet::measure() const {
  Rational m(0);
  for (const auto a : members_) m += space_->weight(a);
  return m;
}

MeasurableSet MeasurableSet::complement() const {
  std::vector<std::size_t> out;
  out.reserve(space_->atom_count() - members_.size());
  std::size_t next = 0;
  for (std::size_t a = 0; a < space_->atom_count(); ++a) {
    if (next < members_.size() && members_[next] == a) {
      ++next;
    } else {
      out.push_back(a);
    }
  }
  return {space_, std::move(out)};
}

MeasurableSet MeasurableSet::union_with(const MeasurableSet& other) const {
  require_same_space(space_, other.space_);
  std::vector<std::size_t> out;
  out.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(out));
  return {space_, std::move(out)};
}

MeasurableSet MeasurableSet::intersect(const MeasurableSet& other) const {
  require_same_space(space_, other.space_);
  std::vector<std::size_t> out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out));
  return {space_, std::move(out)};
}

MeasurableSet MeasurableSet::minus(const MeasurableSet& other) const {
  require_same_space(space_, other.space_);
  std::vector<std::size_t> out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out));
  return {space_, std::move(out)};
}

std::string MeasurableSet::describe() const {
  if (members_.empty()) return "{}";
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(members_[i]);
  }
  return s + "}";
}

}  // namespace lpcompact
