#pragma once

#include <vector>

#include "lpcompact/step_function.hpp"

namespace lpcompact {

// Finite indexed family of step functions over one space and value type.
template <NormedVector V>
class FunctionFamily {
 public:
  explicit FunctionFamily(std::vector<StepFunction<V>> members) : members_(std::move(members)) {
    if (members_.empty()) throw InvalidArgumentError("a function family must be nonempty");
    for (std::size_t i = 1; i < members_.size(); ++i)
      require_same_space(members_[0].space(), members_[i].space());
  }

  const SpacePtr& space() const { return members_[0].space(); }
  std::size_t size() const { return members_.size(); }
  const StepFunction<V>& member(std::size_t i) const { return members_.at(i); }
  const std::vector<StepFunction<V>>& members() const { return members_; }

 private:
  std::vector<StepFunction<V>> members_;
};

}  // namespace lpcompact
