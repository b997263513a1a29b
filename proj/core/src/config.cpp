#include "lpcompact/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lpcompact::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError("config: " + msg); }

void check_keys(const json& obj, const char* where, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const auto* a : allowed) {
      if (key == a) {
        ok = true;
        break;
      }
    }
    if (!ok) fail(std::string("unknown field '") + key + "' in " + where);
  }
}

Rational parse_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    if (auto r = Rational::parse(v.get<std::string>())) return *r;
    fail("cannot parse rational '" + v.get<std::string>() + "' in " + where);
  }
  fail("expected a rational (integer or string) in " + where);
}

std::vector<Rational> parse_grid(const json& v, const std::string& where, bool need_positive) {
  if (!v.is_array() || v.empty()) fail(where + " must be a nonempty array");
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(parse_rational(e, where));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (need_positive && !(Rational(0) < out[i])) fail(where + " entries must be positive");
    if (i > 0 && !(out[i - 1] < out[i])) fail(where + " must be strictly increasing");
  }
  return out;
}

std::vector<std::vector<std::size_t>> parse_blocks(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) fail(where + " must be a nonempty array of blocks");
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& b : v) {
    if (!b.is_array() || b.empty()) fail("each block in " + where + " must be a nonempty array");
    std::vector<std::size_t> atoms;
    for (const auto& a : b) {
      if (!a.is_number_unsigned()) fail("atom indices in " + where + " must be nonnegative integers");
      atoms.push_back(a.get<std::size_t>());
    }
    blocks.push_back(std::move(atoms));
  }
  return blocks;
}

SpaceSpec parse_space(const json& v) {
  SpaceSpec out;
  if (!v.is_object()) fail("'space' must be an object");
  check_keys(v, "space", {"dyadic_level", "weights", "labels"});
  if (v.contains("dyadic_level")) {
    if (v.contains("weights")) fail("'space' takes either dyadic_level or weights, not both");
    if (!v["dyadic_level"].is_number_unsigned()) fail("space.dyadic_level must be a nonnegative integer");
    out.dyadic_level = v["dyadic_level"].get<unsigned>();
  } else if (v.contains("weights")) {
    for (const auto& w : v["weights"]) out.weights.push_back(parse_rational(w, "space.weights"));
    if (out.weights.empty()) fail("space.weights must be nonempty");
    if (v.contains("labels")) {
      for (const auto& l : v["labels"]) {
        if (!l.is_string()) fail("space.labels must be strings");
        out.labels.push_back(l.get<std::string>());
      }
    }
  } else {
    fail("'space' needs dyadic_level or weights");
  }
  return out;
}

NormKind parse_norm(const json& v) {
  const auto s = v.get<std::string>();
  if (s == "sum") return NormKind::sum;
  if (s == "euclid") return NormKind::euclid;
  if (s == "max") return NormKind::max;
  fail("unknown norm '" + s + "' (expected sum, euclid or max)");
}

FamilySpec parse_family(const json& v) {
  FamilySpec out;
  if (!v.is_object()) fail("'family' must be an object");
  if (v.contains("generator")) {
    check_keys(v, "family", {"generator", "members", "level"});
    const auto g = v["generator"].get<std::string>();
    if (g != "rademacher_l1") fail("unknown family generator '" + g + "'");
    if (!v.contains("members") || !v.contains("level"))
      fail("generator family needs 'members' and 'level'");
    out.generated = true;
    out.members = v["members"].get<unsigned>();
    out.level = v["level"].get<unsigned>();
    out.value_type = ValueType::sparse_seq;
    out.norm = NormKind::sum;
    return out;
  }
  check_keys(v, "family", {"value_type", "norm", "members"});
  if (!v.contains("value_type") || !v.contains("members"))
    fail("explicit family needs 'value_type' and 'members'");
  const auto vt = v["value_type"].get<std::string>();
  if (vt == "finite_dim") out.value_type = ValueType::finite_dim;
  else if (vt == "sparse_seq") out.value_type = ValueType::sparse_seq;
  else fail("unknown value_type '" + vt + "'");
  out.norm = v.contains("norm") ? parse_norm(v["norm"]) : NormKind::sum;
  if (!v["members"].is_array() || v["members"].empty()) fail("family.members must be a nonempty array");
  for (const auto& m : v["members"]) {
    check_keys(m, "family.members[]", {"partition", "values"});
    if (!m.contains("partition") || !m.contains("values"))
      fail("each member needs 'partition' and 'values'");
    ExplicitMember em;
    em.blocks = parse_blocks(m["partition"], "member partition");
    const auto& vals = m["values"];
    if (!vals.is_array() || vals.size() != em.blocks.size())
      fail("member needs exactly one value per partition block");
    for (const auto& val : vals) {
      if (out.value_type == ValueType::finite_dim) {
        if (!val.is_array() || val.empty()) fail("finite_dim values must be nonempty arrays");
        std::vector<Rational> comps;
        for (const auto& c : val) comps.push_back(parse_rational(c, "member value"));
        em.dense_values.push_back(std::move(comps));
      } else {
        if (!val.is_object()) fail("sparse_seq values must be objects of index -> rational");
        std::map<unsigned, Rational> entries;
        for (const auto& [key, value] : val.items()) {
          unsigned idx = 0;
          try {
            idx = static_cast<unsigned>(std::stoul(key));
          } catch (...) {
            fail("sparse index '" + key + "' is not a positive integer");
          }
          if (idx < 1) fail("sparse indices start at 1");
          entries.emplace(idx, parse_rational(value, "member value"));
        }
        em.sparse_values.push_back(std::move(entries));
      }
    }
    out.explicit_members.push_back(std::move(em));
  }
  return out;
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("not valid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("top level must be an object");
  check_keys(root, "config",
             {"space", "family", "p", "epsilon", "delta_grid", "m_grid", "partition_chain",
              "block_budget", "probe", "out"});

  RunConfig cfg;
  cfg.raw = json_text;
  if (!root.contains("family")) fail("'family' is required");
  cfg.family = parse_family(root["family"]);

  if (root.contains("space")) {
    cfg.space = parse_space(root["space"]);
  } else if (cfg.family.generated) {
    cfg.space.dyadic_level = cfg.family.level;
  } else {
    fail("'space' is required for explicit families");
  }
  if (cfg.family.generated && cfg.space.dyadic_level &&
      *cfg.space.dyadic_level != cfg.family.level)
    fail("space.dyadic_level must match family.level for the generator");

  if (root.contains("p")) {
    const Rational pr = parse_rational(root["p"], "p");
    if (pr < Rational(1)) fail("p must be at least 1");
    cfg.p = Exponent(pr);
  }
  if (root.contains("epsilon")) {
    cfg.epsilon = parse_rational(root["epsilon"], "epsilon");
    if (!(Rational(0) < cfg.epsilon)) fail("epsilon must be positive");
  } else {
    fail("'epsilon' is required");
  }
  if (root.contains("delta_grid")) cfg.delta_grid = parse_grid(root["delta_grid"], "delta_grid", true);
  if (root.contains("m_grid")) cfg.m_grid = parse_grid(root["m_grid"], "m_grid", true);

  if (root.contains("partition_chain")) {
    const auto& chain = root["partition_chain"];
    check_keys(chain, "partition_chain", {"dyadic_levels", "partitions"});
    cfg.chain_given = true;
    if (chain.contains("dyadic_levels")) {
      for (const auto& l : chain["dyadic_levels"]) {
        if (!l.is_number_unsigned()) fail("dyadic_levels must be nonnegative integers");
        cfg.chain_levels.push_back(l.get<unsigned>());
      }
      if (cfg.chain_levels.empty()) fail("dyadic_levels must be nonempty");
    } else if (chain.contains("partitions")) {
      for (const auto& p : chain["partitions"])
        cfg.chain_blocks.push_back(parse_blocks(p, "partition_chain.partitions"));
      if (cfg.chain_blocks.empty()) fail("partition_chain.partitions must be nonempty");
    } else {
      fail("partition_chain needs dyadic_levels or partitions");
    }
  }

  if (root.contains("block_budget")) {
    if (!root["block_budget"].is_number_unsigned() || root["block_budget"].get<std::size_t>() < 1)
      fail("block_budget must be a positive integer");
    cfg.block_budget = root["block_budget"].get<std::size_t>();
  }

  if (root.contains("probe")) {
    const auto& p = root["probe"];
    check_keys(p, "probe", {"level", "samples", "seed"});
    if (p.contains("level")) cfg.probe.level = p["level"].get<unsigned>();
    if (p.contains("samples")) cfg.probe.samples = p["samples"].get<std::size_t>();
    if (p.contains("seed")) cfg.probe.seed = p["seed"].get<std::uint64_t>();
  }

  if (root.contains("out")) cfg.out_path = root["out"].get<std::string>();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace lpcompact::cli
