#include "lpcompact/frechet.hpp"

namespace lpcompact::detail {

Partition truncate_partition(const Partition& p, std::size_t budget) {
  if (budget < 1) throw InvalidArgumentError("block budget must be at least 1");
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<Rational> masses;
  blocks.reserve(p.block_count());
  for (const auto& b : p.blocks()) {
    blocks.push_back(b.members());
    masses.push_back(b.measure());
  }
  while (blocks.size() > budget) {
    std::size_t pick = 0;
    Rational best = masses[0] + masses[1];
    for (std::size_t i = 1; i + 1 < blocks.size(); ++i) {
      const Rational m = masses[i] + masses[i + 1];
      if (m < best) {
        best = m;
        pick = i;
      }
    }
    auto& into = blocks[pick];
    into.insert(into.end(), blocks[pick + 1].begin(), blocks[pick + 1].end());
    masses[pick] = best;
    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(pick) + 1);
    masses.erase(masses.begin() + static_cast<std::ptrdiff_t>(pick) + 1);
  }
  return Partition::from_blocks(p.space(), std::move(blocks));
}

}  // namespace lpcompact::detail
