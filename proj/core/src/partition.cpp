#include "lpcompact/partition.hpp"

#include <algorithm>
#include <map>

#include "lpcompact/errors.hpp"

namespace lpcompact {

Partition Partition::trivial(SpacePtr space) {
  std::vector<std::size_t> all(space->atom_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return from_blocks(std::move(space), {std::move(all)});
}

Partition Partition::atoms(SpacePtr space) {
  std::vector<std::vector<std::size_t>> blocks(space->atom_count());
  for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i] = {i};
  return from_blocks(std::move(space), std::move(blocks));
}

Partition Partition::consecutive(SpacePtr space, std::size_t count) {
  const std::size_t n = space->atom_count();
  if (count == 0 || n % count != 0)
    throw InvalidArgumentError("block count " + std::to_string(count) +
                               " does not divide atom count " + std::to_string(n));
  const std::size_t run = n / count;
  std::vector<std::vector<std::size_t>> blocks(count);
  for (std::size_t b = 0; b < count; ++b) {
    blocks[b].reserve(run);
    for (std::size_t i = 0; i < run; ++i) blocks[b].push_back(b * run + i);
  }
  return from_blocks(std::move(space), std::move(blocks));
}

Partition Partition::from_blocks(SpacePtr space, std::vector<std::vector<std::size_t>> raw) {
  const std::size_t n = space->atom_count();
  std::vector<std::size_t> owner(n, raw.size());
  std::vector<MeasurableSet> blocks;
  blocks.reserve(raw.size());
  for (auto& b : raw) {
    if (b.empty()) throw InvalidArgumentError("partition block is empty");
    blocks.push_back(MeasurableSet::of(space, std::move(b)));
  }
  std::sort(blocks.begin(), blocks.end(), [](const MeasurableSet& a, const MeasurableSet& b) {
    return a.members().front() < b.members().front();
  });
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    for (const auto atom : blocks[bi].members()) {
      if (owner[atom] != raw.size())
        throw InvalidArgumentError("partition blocks overlap at atom " + std::to_string(atom));
      owner[atom] = bi;
    }
  }
  for (std::size_t atom = 0; atom < n; ++atom) {
    if (owner[atom] == raw.size())
      throw InvalidArgumentError("partition misses atom " + std::to_string(atom));
  }
  return Partition(std::move(space), std::move(blocks), std::move(owner));
}

bool operator==(const Partition& a, const Partition& b) {
  if (!same_space(a.space_, b.space_) || a.blocks_.size() != b.blocks_.size()) return false;
  for (std::size_t i = 0; i < a.blocks_.size(); ++i) {
    if (a.blocks_[i].members() != b.blocks_[i].members()) return false;
  }
  return true;
}

Partition common_refinement(const Partition& p1, const Partition& p2) {
  require_same_space(p1.space(), p2.space());
  // group atoms by their (block in p1, block in p2) pair
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> cells;
  for (std::size_t atom = 0; atom < p1.space()->atom_count(); ++atom)
    cells[{p1.block_index_of(atom), p2.block_index_of(atom)}].push_back(atom);
  std::vector<std::vector<std::size_t>> blocks;
  blocks.reserve(cells.size());
  for (auto& [key, atoms] : cells) blocks.push_back(std::move(atoms));
  return Partition::from_blocks(p1.space(), std::move(blocks));
}

bool is_refinement(const Partition& fine, const Partition& coarse) {
  require_same_space(fine.space(), coarse.space());
  for (const auto& block : fine.blocks()) {
    const std::size_t home = coarse.block_index_of(block.members().front());
    for (const auto atom : block.members()) {
      if (coarse.block_index_of(atom) != home) return false;
    }
  }
  return true;
}

}  // namespace lpcompact
