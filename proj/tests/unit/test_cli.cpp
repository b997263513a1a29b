#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "lpcompact/report.hpp"
#include "lpcompact/runner.hpp"

using namespace lpcompact;
using namespace lpcompact::cli;

namespace {

std::string audit_cfg_text(const char* extra = "") {
  std::string s = R"({
    "family": {"generator": "rademacher_l1", "members": 2, "level": 4},
    "p": 1,
    "epsilon": "1/4",
    "delta_grid": ["1/32", "1/16", "1/8", "1/4"])";
  s += extra;
  s += "\n}";
  return s;
}

struct RunOutput {
  int code;
  std::string machine;
  std::string human;
};

template <class Fn>
RunOutput capture(Fn&& fn) {
  std::ostringstream machine, human;
  const int code = fn(machine, human);
  return {code, machine.str(), human.str()};
}

}  // namespace

TEST_CASE("config parsing accepts the documented schema") {
  const auto cfg = parse_config(audit_cfg_text());
  CHECK(cfg.family.generated);
  CHECK(cfg.family.members == 2);
  CHECK(cfg.family.level == 4);
  CHECK(cfg.p.rational() == Rational(1));
  CHECK(cfg.epsilon == Rational(1, 4));
  CHECK(cfg.delta_grid.size() == 4);
  CHECK(!cfg.chain_given);
  CHECK(cfg.space.dyadic_level == 4);
}

TEST_CASE("unknown fields are rejected") {
  CHECK_THROWS_AS(parse_config(audit_cfg_text(R"(, "tolerance": 1)")), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"family": {"generator": "rademacher_l1",
      "members": 2, "level": 4, "shift": 1}, "epsilon": "1/4"})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"space": {"dyadic_level": 2, "name": "x"},
      "family": {"generator": "rademacher_l1", "members": 2, "level": 2},
      "epsilon": "1/4"})"),
                  ConfigError);
}

TEST_CASE("config validation catches structural mistakes") {
  // missing epsilon
  CHECK_THROWS_AS(parse_config(R"({"family": {"generator": "rademacher_l1",
      "members": 2, "level": 4}})"),
                  ConfigError);
  // non-monotone grid
  CHECK_THROWS_AS(parse_config(audit_cfg_text(R"(, "m_grid": ["2", "1"])")), ConfigError);
  // unknown generator
  CHECK_THROWS_AS(parse_config(R"({"family": {"generator": "haar", "members": 2,
      "level": 4}, "epsilon": "1/4"})"),
                  ConfigError);
  // bad rational
  CHECK_THROWS_AS(parse_config(R"({"family": {"generator": "rademacher_l1",
      "members": 2, "level": 4}, "epsilon": "x"})"),
                  ConfigError);
  // not json at all
  CHECK_THROWS_AS(parse_config("not json"), ConfigError);
}

TEST_CASE("explicit families parse into step functions") {
  const std::string text = R"({
    "space": {"weights": ["1/2", "1/2"]},
    "family": {"value_type": "finite_dim", "norm": "sum",
               "members": [{"partition": [[0], [1]], "values": [["1"], ["-1"]]}]},
    "p": 2,
    "epsilon": "1/2",
    "delta_grid": ["1/4", "1/2"],
    "partition_chain": {"partitions": [[[0, 1]], [[0], [1]]]}
  })";
  const auto cfg = parse_config(text);
  CHECK(!cfg.family.generated);
  CHECK(cfg.family.explicit_members.size() == 1);
  CHECK(cfg.chain_blocks.size() == 2);

  const auto out = capture([&](std::ostream& m, std::ostream& h) { return run_audit(cfg, m, h); });
  CHECK(out.code == kExitPass);
  CHECK(out.machine.find("summary,all_pass,1") != std::string::npos);
}

TEST_CASE("rademacher run passes on the reference parameters") {
  RademacherArgs args;
  args.members = 8;
  args.level = 8;
  args.probe_level = 3;
  args.epsilon = Rational(9, 10);
  const auto out = capture(
      [&](std::ostream& m, std::ostream& h) { return run_rademacher(args, m, h); });
  CHECK(out.code == kExitPass);
  CHECK(out.machine.find("summary,pass,1") != std::string::npos);
  CHECK(out.machine.find("covering,family,8,8,8") != std::string::npos);
  CHECK(out.machine.find("covering,values,16,16,16") != std::string::npos);
}

TEST_CASE("rademacher run rejects inconsistent parameters with exit 2") {
  RademacherArgs args;
  args.members = 4;
  args.level = 3;  // L < N
  const auto out = capture(
      [&](std::ostream& m, std::ostream& h) { return run_rademacher(args, m, h); });
  CHECK(out.code == kExitConfig);
  CHECK(out.human.find("level") != std::string::npos);
}

TEST_CASE("one-member rademacher run degenerates cleanly") {
  RademacherArgs args;
  args.members = 1;
  args.level = 1;
  args.probe_level = 1;
  const auto out = capture(
      [&](std::ostream& m, std::ostream& h) { return run_rademacher(args, m, h); });
  CHECK(out.code == kExitPass);
}

TEST_CASE("audit run emits the constant in the header and exits 0") {
  const auto cfg = parse_config(audit_cfg_text());
  const auto out = capture([&](std::ostream& m, std::ostream& h) { return run_audit(cfg, m, h); });
  CHECK(out.code == kExitPass);
  CHECK(out.machine.find("param,constant_T,14,") != std::string::npos);
  CHECK(out.machine.find("summary,all_pass,1") != std::string::npos);
}

TEST_CASE("audit run carries a ui-profile section when m_grid is given") {
  const auto cfg = parse_config(audit_cfg_text(R"(, "m_grid": ["1", "2"])"));
  const auto out = capture([&](std::ostream& m, std::ostream& h) { return run_audit(cfg, m, h); });
  CHECK(out.code == kExitPass);
  CHECK(out.machine.find("ui_tail,1,") != std::string::npos);
  CHECK(out.machine.find("ui_modulus,1/4,") != std::string::npos);
}

TEST_CASE("audit run without a delta grid is a config error") {
  auto cfg = parse_config(audit_cfg_text());
  cfg.delta_grid.clear();
  const auto out = capture([&](std::ostream& m, std::ostream& h) { return run_audit(cfg, m, h); });
  CHECK(out.code == kExitConfig);
}

TEST_CASE("audit run reports witness failures with exit 3") {
  const auto cfg = parse_config(audit_cfg_text(R"(, "block_budget": 4)"));
  auto scaled = cfg;
  scaled.family.members = 4;
  scaled.family.level = 4;
  const auto out =
      capture([&](std::ostream& m, std::ostream& h) { return run_audit(scaled, m, h); });
  CHECK(out.code == kExitHypothesis);
  CHECK(out.machine.find("failure,no_oscillation_witness") != std::string::npos);
  CHECK(out.machine.find("certificate,2,") != std::string::npos);
  CHECK(out.machine.find("certificate,3,") != std::string::npos);
  CHECK(out.human.find("residual oscillation") != std::string::npos);
}

TEST_CASE("riesz curve of the third sign function") {
  const std::string text = R"({
    "space": {"dyadic_level": 3},
    "family": {"value_type": "finite_dim", "norm": "sum",
               "members": [{"partition": [[0],[1],[2],[3],[4],[5],[6],[7]],
                            "values": [["1"],["-1"],["1"],["-1"],["1"],["-1"],["1"],["-1"]]}]},
    "p": 2,
    "epsilon": "1/4",
    "partition_chain": {"dyadic_levels": [0, 1, 2, 3]}
  })";
  const auto cfg = parse_config(text);
  const auto out =
      capture([&](std::ostream& m, std::ostream& h) { return run_riesz_curve(cfg, m, h); });
  CHECK(out.code == kExitPass);
  CHECK(out.machine.find("gap,chain[0],1,1,") != std::string::npos);
  CHECK(out.machine.find("gap,chain[1],2,1,") != std::string::npos);
  CHECK(out.machine.find("gap,chain[2],4,1,") != std::string::npos);
  CHECK(out.machine.find("gap,chain[3],8,0,") != std::string::npos);
  CHECK(out.machine.find("summary,final_gap_zero,1") != std::string::npos);
}

TEST_CASE("riesz curve rejects non-monotone chains with exit 2") {
  const std::string text = R"({
    "space": {"dyadic_level": 2},
    "family": {"value_type": "finite_dim", "norm": "sum",
               "members": [{"partition": [[0,1],[2,3]], "values": [["1"], ["-1"]]}]},
    "p": 1,
    "epsilon": "1/4",
    "partition_chain": {"dyadic_levels": [2, 1]}
  })";
  const auto cfg = parse_config(text);
  const auto out =
      capture([&](std::ostream& m, std::ostream& h) { return run_riesz_curve(cfg, m, h); });
  CHECK(out.code == kExitConfig);
}

TEST_CASE("machine reports are byte-identical across runs") {
  const auto cfg = parse_config(audit_cfg_text());
  const auto a = capture([&](std::ostream& m, std::ostream& h) { return run_audit(cfg, m, h); });
  const auto b = capture([&](std::ostream& m, std::ostream& h) { return run_audit(cfg, m, h); });
  CHECK(a.machine == b.machine);

  RademacherArgs args;
  args.members = 6;
  args.level = 6;
  args.probe_level = 5;  // sampled probes exercise the seeded path
  const auto c = capture(
      [&](std::ostream& m, std::ostream& h) { return run_rademacher(args, m, h); });
  const auto d = capture(
      [&](std::ostream& m, std::ostream& h) { return run_rademacher(args, m, h); });
  CHECK(c.machine == d.machine);
}

TEST_CASE("csv escaping") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("hashing is stable") {
  CHECK(hex64(fnv1a64("lpcompact")) == hex64(fnv1a64("lpcompact")));
  CHECK(hex64(fnv1a64("a")) != hex64(fnv1a64("b")));
  CHECK(hex64(0).size() == 16);
}
