#include "lpcompact/covering.hpp"

#include <algorithm>

#include "lpcompact/errors.hpp"

namespace lpcompact {

namespace {

// Minimal number of balls (index sets) covering all points, by trying
// combinations in ascending size and lexicographic order. count <= 15.
std::optional<std::size_t> exact_set_cover(const std::vector<std::uint32_t>& ball,
                                           std::uint32_t all) {
  const std::size_t n = ball.size();
  std::vector<std::size_t> pick;
  // depth-first over combinations of fixed size k
  const std::function<bool(std::size_t, std::size_t, std::uint32_t)> search =
      [&](std::size_t start, std::size_t remaining, std::uint32_t covered) -> bool {
    if (covered == all) return true;
    if (remaining == 0) return false;
    for (std::size_t i = start; i + remaining <= n; ++i) {
      if (search(i + 1, remaining - 1, covered | ball[i])) return true;
    }
    return false;
  };
  for (std::size_t k = 1; k <= n; ++k) {
    if (search(0, k, 0)) return k;
  }
  return std::nullopt;
}

}  // namespace

CoveringResult covering_bracket(
    std::size_t count,
    const std::function<bool(std::size_t, std::size_t, const Rational&)>& dist_leq,
    const Rational& epsilon, std::size_t exact_limit) {
  if (count == 0) throw InvalidArgumentError("covering bracket of an empty set");
  CoveringResult res;
  res.epsilon = epsilon;
  const Rational two_eps = epsilon + epsilon;

  // pairwise reach matrices (symmetric; diagonal inside every ball)
  std::vector<std::vector<char>> in_ball(count, std::vector<char>(count, 0));
  std::vector<std::vector<char>> separated(count, std::vector<char>(count, 0));
  for (std::size_t i = 0; i < count; ++i) {
    in_ball[i][i] = 1;
    for (std::size_t j = i + 1; j < count; ++j) {
      const bool near = dist_leq(i, j, epsilon);
      in_ball[i][j] = in_ball[j][i] = near ? 1 : 0;
      const bool sep = !dist_leq(i, j, two_eps);
      separated[i][j] = separated[j][i] = sep ? 1 : 0;
    }
  }

  // greedy cover: center covering most uncovered points, lowest index wins
  {
    std::vector<char> covered(count, 0);
    std::size_t left = count;
    while (left > 0) {
      std::size_t best = count, best_gain = 0;
      for (std::size_t i = 0; i < count; ++i) {
        std::size_t gain = 0;
        for (std::size_t j = 0; j < count; ++j) gain += !covered[j] && in_ball[i][j];
        if (gain > best_gain) {
          best_gain = gain;
          best = i;
        }
      }
      for (std::size_t j = 0; j < count; ++j) {
        if (!covered[j] && in_ball[best][j]) {
          covered[j] = 1;
          --left;
        }
      }
      ++res.upper;
    }
  }

  // greedy packing: first-fit scan keeping points pairwise > 2*epsilon apart
  {
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < count; ++i) {
      const bool ok = std::all_of(kept.begin(), kept.end(),
                                  [&](std::size_t k) { return separated[k][i]; });
      if (ok) kept.push_back(i);
    }
    res.lower = kept.size();
  }

  if (count <= exact_limit && count <= 31) {
    std::vector<std::uint32_t> ball(count, 0);
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        if (in_ball[i][j]) ball[i] |= std::uint32_t{1} << j;
      }
    }
    res.exact = exact_set_cover(ball, count == 31 ? 0x7fffffffu : (std::uint32_t{1} << count) - 1);
  } else if (res.lower == res.upper) {
    res.exact = res.upper;  // bracket is tight, optimum pinned
  }
  return res;
}

}  // namespace lpcompact
