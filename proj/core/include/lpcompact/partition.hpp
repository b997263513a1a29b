#pragma once

#include <vector>

#include "lpcompact/measure_space.hpp"

namespace lpcompact {

// Finite partition of a space into blocks of positive measure. Blocks are
// kept sorted by least atom index; two partitions are equal iff their sorted
// block lists are equal.
class Partition {
 public:
  static Partition trivial(SpacePtr space);
  static Partition atoms(SpacePtr space);
  static Partition from_blocks(SpacePtr space, std::vector<std::vector<std::size_t>> blocks);

  // Splits atoms [0, n) into `count` consecutive runs of equal length;
  // requires count to divide the atom count. consecutive(space, 2^j) is the
  // level-j dyadic partition of a dyadic space.
  static Partition consecutive(SpacePtr space, std::size_t count);

  const SpacePtr& space() const { return space_; }
  std::size_t block_count() const { return blocks_.size(); }
  const MeasurableSet& block(std::size_t i) const { return blocks_.at(i); }
  const std::vector<MeasurableSet>& blocks() const { return blocks_; }
  std::size_t block_index_of(std::size_t atom) const { return block_of_atom_.at(atom); }
  bool is_atoms() const { return blocks_.size() == space_->atom_count(); }

  friend bool operator==(const Partition& a, const Partition& b);

 private:
  Partition(SpacePtr space, std::vector<MeasurableSet> blocks,
            std::vector<std::size_t> block_of_atom)
      : space_(std::move(space)),
        blocks_(std::move(blocks)),
        block_of_atom_(std::move(block_of_atom)) {}

  SpacePtr space_;
  std::vector<MeasurableSet> blocks_;
  std::vector<std::size_t> block_of_atom_;
};

// Blocks are all nonempty pairwise intersections; refines both inputs.
Partition common_refinement(const Partition& p1, const Partition& p2);

// True iff every block of `fine` is contained in one block of `coarse`.
bool is_refinement(const Partition& fine, const Partition& coarse);

}  // namespace lpcompact
