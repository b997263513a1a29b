#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpcompact/rademacher.hpp"
#include "lpcompact/vectors.hpp"

namespace lpcompact::cli {

struct SpaceSpec {
  std::optional<unsigned> dyadic_level;
  std::vector<Rational> weights;     // explicit atoms when no dyadic level
  std::vector<std::string> labels;
};

enum class ValueType { finite_dim, sparse_seq };

struct ExplicitMember {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::vector<Rational>> dense_values;          // finite_dim
  std::vector<std::map<unsigned, Rational>> sparse_values;  // sparse_seq
};

struct FamilySpec {
  bool generated = false;  // rademacher_l1
  unsigned members = 0;    // generator: N
  unsigned level = 0;      // generator: L
  ValueType value_type = ValueType::finite_dim;
  NormKind norm = NormKind::sum;
  std::vector<ExplicitMember> explicit_members;
};

struct ProbeSpec {
  unsigned level = 3;
  std::size_t samples = kDefaultProbeSamples;
  std::uint64_t seed = kDefaultProbeSeed;
};

// One strict-schema config file drives every CLI run; unknown fields are
// rejected so a typo cannot silently change an experiment.
struct RunConfig {
  SpaceSpec space;
  FamilySpec family;
  Exponent p{1};
  Rational epsilon;
  std::vector<Rational> delta_grid;
  std::vector<Rational> m_grid;
  std::vector<unsigned> chain_levels;  // dyadic partition chain
  std::vector<std::vector<std::vector<std::size_t>>> chain_blocks;  // explicit chain
  bool chain_given = false;
  std::optional<std::size_t> block_budget;
  ProbeSpec probe;
  std::string out_path;
  std::string raw;  // exact file bytes; hashed into the report header
};

RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

}  // namespace lpcompact::cli
