// Command-line front end: configure spaces and families, run the
// diagnostics, emit machine-readable reports.
//
// Subcommands:
//   rademacher   reproduce the sign-sequence / basis-sequence example
//   audit        run the full inequality-chain audit from a config file
//   riesz-curve  conditional-expectation gap along a refinement chain
//
// Exit codes: 0 pass, 1 indicator mismatch, 2 config error, 3 hypothesis
// failure (no feasible delta or no oscillation witness).

#include <CLI11.hpp>

#include <iostream>

#include "lpcompact/runner.hpp"

namespace cli = lpcompact::cli;

namespace {

lpcompact::Rational parse_rational_arg(const std::string& text, const std::string& name) {
  if (auto r = lpcompact::Rational::parse(text)) return *r;
  throw CLI::ValidationError(name, "expected a rational like 1/4 or 0.25");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compactness diagnostics for vector-valued step functions"};
  app.require_subcommand(1);

  // rademacher
  cli::RademacherArgs rargs;
  std::string repsilon = "9/10";
  auto* rad = app.add_subcommand("rademacher", "reproduce the separating example");
  rad->add_option("--members,-n", rargs.members, "number of family members N")->required();
  rad->add_option("--level,-l", rargs.level, "dyadic resolution level L (>= N)")->required();
  rad->add_option("--probe-level,-k", rargs.probe_level, "dyadic level of the probed unions");
  rad->add_option("--epsilon,-e", repsilon, "covering scale (rational)");
  rad->add_option("--samples", rargs.samples, "sampled unions when probes are not exhaustive");
  rad->add_option("--seed", rargs.seed, "probe sampling seed");
  rad->add_option("--out,-o", rargs.out_path, "machine report path (default: stdout)");

  // audit / riesz-curve
  std::string audit_config, riesz_config, out_override;
  auto* aud = app.add_subcommand("audit", "run the inequality-chain audit");
  aud->add_option("--config,-c", audit_config, "JSON config file")->required();
  aud->add_option("--out,-o", out_override, "override the config's output path");
  auto* rsz = app.add_subcommand("riesz-curve", "gap curve along a refinement chain");
  rsz->add_option("--config,-c", riesz_config, "JSON config file")->required();
  rsz->add_option("--out,-o", out_override, "override the config's output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rad->parsed()) {
      rargs.epsilon = parse_rational_arg(repsilon, "--epsilon");
      return cli::run_rademacher(rargs, std::cout, std::cerr);
    }
    const std::string& path = aud->parsed() ? audit_config : riesz_config;
    lpcompact::cli::RunConfig cfg = lpcompact::cli::load_config(path);
    if (!out_override.empty()) cfg.out_path = out_override;
    return aud->parsed() ? cli::run_audit(cfg, std::cout, std::cerr)
                         : cli::run_riesz_curve(cfg, std::cout, std::cerr);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return cli::kExitConfig;
  } catch (const lpcompact::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return cli::kExitConfig;
  }
}
