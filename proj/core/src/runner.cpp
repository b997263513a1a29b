#include "lpcompact/runner.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "lpcompact/audit.hpp"
#include "lpcompact/report.hpp"
#include "lpcompact/riesz.hpp"

namespace lpcompact::cli {

namespace {

int write_machine(const std::string& out_path, std::ostream& fallback,
                  const std::function<void(std::ostream&)>& emit) {
  if (out_path.empty() || out_path == "-") {
    emit(fallback);
    return kExitPass;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw ConfigError("cannot open output file: " + out_path);
  emit(file);
  return kExitPass;
}

SpacePtr build_space(const SpaceSpec& spec) {
  if (spec.dyadic_level) return MeasureSpace::dyadic(*spec.dyadic_level);
  return MeasureSpace::with_weights(spec.weights, spec.labels);
}

template <NormedVector V>
StepFunction<V> build_member(const SpacePtr& space, const FamilySpec& spec,
                             const ExplicitMember& em);

template <>
StepFunction<FiniteDimVector> build_member(const SpacePtr& space, const FamilySpec& spec,
                                           const ExplicitMember& em) {
  Partition pi = Partition::from_blocks(space, em.blocks);
  std::vector<FiniteDimVector> vals;
  const std::size_t dim = em.dense_values.front().size();
  for (const auto& comps : em.dense_values) {
    if (comps.size() != dim) throw ConfigError("config: member values have mixed dimensions");
    vals.push_back(FiniteDimVector::of(spec.norm, comps));
  }
  return {std::move(pi), std::move(vals)};
}

template <>
StepFunction<SparseSeqVector> build_member(const SpacePtr& space, const FamilySpec& spec,
                                           const ExplicitMember& em) {
  Partition pi = Partition::from_blocks(space, em.blocks);
  std::vector<SparseSeqVector> vals;
  for (const auto& entries : em.sparse_values) vals.emplace_back(spec.norm, entries);
  return {std::move(pi), std::move(vals)};
}

template <NormedVector V>
FunctionFamily<V> build_explicit_family(const SpacePtr& space, const FamilySpec& spec) {
  std::vector<StepFunction<V>> members;
  members.reserve(spec.explicit_members.size());
  for (const auto& em : spec.explicit_members) members.push_back(build_member<V>(space, spec, em));
  return FunctionFamily<V>(std::move(members));
}

std::vector<Partition> build_chain(const RunConfig& cfg, const SpacePtr& space) {
  std::vector<Partition> chain;
  if (cfg.chain_given) {
    for (const auto level : cfg.chain_levels) {
      if (level >= 63 || (std::size_t{1} << level) > space->atom_count())
        throw ConfigError("config: chain level " + std::to_string(level) +
                          " exceeds the space resolution");
      chain.push_back(Partition::consecutive(space, std::size_t{1} << level));
    }
    for (const auto& blocks : cfg.chain_blocks)
      chain.push_back(Partition::from_blocks(space, blocks));
    return chain;
  }
  if (!space->uniform_dyadic())
    throw ConfigError("config: partition_chain is required for non-dyadic spaces");
  for (unsigned l = 0; l <= space->dyadic_level(); ++l)
    chain.push_back(Partition::consecutive(space, std::size_t{1} << l));
  return chain;
}

void emit_covering(ReportWriter& w, const char* which, const CoveringResult& c) {
  std::vector<std::string> f{"covering", which, std::to_string(c.lower), std::to_string(c.upper),
                             c.exact ? std::to_string(*c.exact) : std::string()};
  w.record(f);
}

// Shared body of run_audit across the two value types.
template <NormedVector V>
int audit_with_family(const RunConfig& cfg, const FunctionFamily<V>& family,
                      std::ostream& machine_fallback, std::ostream& human) {
  if (cfg.delta_grid.empty()) throw ConfigError("config: audit needs a delta_grid");
  const auto chain = build_chain(cfg, family.space());

  const std::size_t budget = cfg.block_budget.value_or(SIZE_MAX);
  const auto emit_failure = [&](const char* kind, const std::string& detail,
                                const std::vector<FrechetCertificate>* certs) {
    write_machine(cfg.out_path, machine_fallback, [&](std::ostream& out) {
      ReportWriter w(out);
      w.header(hex64(fnv1a64(cfg.raw)));
      w.record({"failure", kind, detail});
      if (certs) {
        for (const auto& c : *certs) {
          std::vector<std::string> f{"certificate", std::to_string(c.member),
                                     std::to_string(c.block)};
          ReportWriter::append(f, c.residual_oscillation);
          ReportWriter::append(f, c.mass_spent);
          w.record(f);
        }
      }
    });
  };

  FamilyAuditResult result{Rational(0), FrechetWitness{Rational(0), chain.front(), {}}, {}, false};
  try {
    result = family_theorem_audit(family, cfg.p, cfg.epsilon, cfg.delta_grid, chain, budget);
  } catch (const NoFeasibleDeltaError& e) {
    emit_failure("no_feasible_delta", e.what(), nullptr);
    human << "hypothesis failure: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const FrechetSearchError& e) {
    emit_failure("no_oscillation_witness", e.what(), &e.certificates);
    human << "hypothesis failure: " << e.what() << "\n";
    for (const auto& c : e.certificates)
      human << "  member " << c.member << ": residual oscillation "
            << c.residual_oscillation.to_string() << " on block " << c.block << ", mass spent "
            << c.mass_spent.to_string() << "\n";
    return kExitHypothesis;
  }

  write_machine(cfg.out_path, machine_fallback, [&](std::ostream& out) {
    ReportWriter w(out);
    w.header(hex64(fnv1a64(cfg.raw)));
    {
      std::vector<std::string> f{"param", "p"};
      ReportWriter::append(f, cfg.p.rational());
      w.record(f);
    }
    {
      std::vector<std::string> f{"param", "epsilon"};
      ReportWriter::append(f, cfg.epsilon);
      w.record(f);
    }
    {
      std::vector<std::string> f{"param", "delta"};
      ReportWriter::append(f, result.delta);
      w.record(f);
    }
    {
      std::vector<std::string> f{"param", "constant_T"};
      ReportWriter::append(f, result.reports.front().constant_T);
      w.record(f);
    }
    w.record({"param", "block_budget",
              cfg.block_budget ? std::to_string(*cfg.block_budget) : "unlimited"});
    w.record({"witness", "partition_blocks", std::to_string(result.witness.pi.block_count())});
    for (std::size_t i = 0; i < result.witness.trimmed.size(); ++i) {
      std::vector<std::string> f{"witness_member", std::to_string(i)};
      ReportWriter::append(f, result.witness.trimmed[i].measure());
      w.record(f);
    }
    for (const auto& r : result.reports) {
      for (const auto& line : r.lines) {
        std::vector<std::string> f{"audit_line", std::to_string(r.member), r.partition_label,
                                   line.label};
        ReportWriter::append(f, line.lhs);
        ReportWriter::append(f, line.rhs);
        f.push_back(line.pass ? "1" : "0");
        w.record(f);
      }
      std::vector<std::string> f{"audit_member", std::to_string(r.member), r.partition_label};
      ReportWriter::append(f, r.gap);
      f.push_back(r.final_bound_pass ? "1" : "0");
      w.record(f);
    }
    if (!cfg.m_grid.empty()) {
      const auto prof = ui_profile(family, cfg.p, cfg.m_grid, cfg.delta_grid);
      for (const auto& [m, t] : prof.tail) {
        std::vector<std::string> f{"ui_tail"};
        ReportWriter::append(f, m);
        ReportWriter::append(f, t);
        w.record(f);
      }
      for (const auto& [d, v] : prof.modulus) {
        std::vector<std::string> f{"ui_modulus"};
        ReportWriter::append(f, d);
        ReportWriter::append(f, v);
        w.record(f);
      }
    }
    w.record({"summary", "all_pass", result.all_pass ? "1" : "0"});
  });

  human << "audited " << family.size() << " member(s) against " << result.reports.size()
        << " report(s); delta = " << result.delta.to_string()
        << ", T = " << result.reports.front().constant_T.to_string() << "\n";
  human << (result.all_pass ? "every inequality line holds\n"
                            : "at least one inequality line FAILED\n");
  return result.all_pass ? kExitPass : kExitMismatch;
}

}  // namespace

int run_rademacher(const RademacherArgs& args, std::ostream& machine, std::ostream& human) {
  ExampleReport rep;
  try {
    rep = example_report(args.members, args.level, args.probe_level, args.epsilon, args.samples,
                         args.seed);
  } catch (const Error& e) {
    human << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  std::ostringstream canonical;
  canonical << "rademacher members=" << args.members << " level=" << args.level
            << " probe_level=" << args.probe_level << " epsilon=" << args.epsilon.to_string()
            << " samples=" << args.samples << " seed=" << args.seed;

  try {
    write_machine(args.out_path, machine, [&](std::ostream& out) {
      ReportWriter w(out);
      w.header(hex64(fnv1a64(canonical.str())));
      w.record({"param", "members", std::to_string(rep.members)});
      w.record({"param", "level", std::to_string(rep.level)});
      w.record({"param", "probe_level", std::to_string(rep.probe_level)});
      {
        std::vector<std::string> f{"param", "epsilon"};
        ReportWriter::append(f, rep.epsilon);
        w.record(f);
      }
      w.record({"param", "probe_seed", std::to_string(rep.seed)});
      w.record({"param", "probe_count", std::to_string(rep.probe_count)});
      w.record({"param", "exhaustive_probes", rep.exhaustive_probes ? "1" : "0"});
      for (unsigned n = 0; n < rep.members; ++n) {
        std::vector<std::string> f{"integral_max", std::to_string(n + 1)};
        ReportWriter::append(f, rep.max_integral_norm[n]);
        w.record(f);
      }
      emit_covering(w, "family", rep.family_cover);
      w.record({"value_count", std::to_string(rep.value_count)});
      emit_covering(w, "values", rep.value_cover);
      for (const auto& [m, t] : rep.ui.tail) {
        std::vector<std::string> f{"ui_tail"};
        ReportWriter::append(f, m);
        ReportWriter::append(f, t);
        w.record(f);
      }
      for (const auto& [d, v] : rep.ui.modulus) {
        std::vector<std::string> f{"ui_modulus"};
        ReportWriter::append(f, d);
        ReportWriter::append(f, v);
        w.record(f);
      }
      w.record({"verdict", "integrals_vanish_beyond_probe_level",
                rep.integrals_vanish_beyond_probe_level ? "1" : "0"});
      w.record({"verdict", "ui_tail_vanishes", rep.ui_tail_vanishes ? "1" : "0"});
      w.record({"verdict", "integral_tight_indicators",
                rep.integral_tight_indicators_pass ? "1" : "0"});
      w.record({"verdict", "separation_matches_prediction",
                rep.separation_matches_prediction ? "1" : "0"});
      w.record({"note", "covering separation is a non-total-boundedness witness over the "
                        "probed scales, not a statement over all compact sets"});
      w.record({"summary", "pass", rep.pass() ? "1" : "0"});
    });
  } catch (const ConfigError& e) {
    human << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  human << "probed " << rep.probe_count << " union(s) at level " << rep.probe_level << "; "
        << "family covering " << rep.family_cover.upper << ", value covering "
        << rep.value_cover.upper << "\n";
  human << (rep.pass() ? "integral-tightness indicators pass; separation matches predictions\n"
                       : "indicator mismatch\n");
  return rep.pass() ? kExitPass : kExitMismatch;
}

int run_audit(const RunConfig& cfg, std::ostream& machine, std::ostream& human) {
  try {
    const SpacePtr space =
        cfg.family.generated ? MeasureSpace::dyadic(cfg.family.level) : build_space(cfg.space);
    if (cfg.family.generated) {
      const auto family = rademacher_l1_family(cfg.family.members, cfg.family.level);
      return audit_with_family(cfg, family, machine, human);
    }
    if (cfg.family.value_type == ValueType::finite_dim) {
      const auto family = build_explicit_family<FiniteDimVector>(space, cfg.family);
      return audit_with_family(cfg, family, machine, human);
    }
    const auto family = build_explicit_family<SparseSeqVector>(space, cfg.family);
    return audit_with_family(cfg, family, machine, human);
  } catch (const ConfigError& e) {
    human << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidArgumentError& e) {
    human << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const SpaceMismatchError& e) {
    human << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
}

int run_riesz_curve(const RunConfig& cfg, std::ostream& machine, std::ostream& human) {
  try {
    const SpacePtr space =
        cfg.family.generated ? MeasureSpace::dyadic(cfg.family.level) : build_space(cfg.space);
    const auto chain_run = [&](const auto& family) {
      const auto chain = build_chain(cfg, family.space());
      const auto curve = riesz_gap_curve(family, chain, cfg.p);
      write_machine(cfg.out_path, machine, [&](std::ostream& out) {
        ReportWriter w(out);
        w.header(hex64(fnv1a64(cfg.raw)));
        {
          std::vector<std::string> f{"param", "p"};
          ReportWriter::append(f, cfg.p.rational());
          w.record(f);
        }
        for (std::size_t i = 0; i < curve.size(); ++i) {
          std::vector<std::string> f{"gap", "chain[" + std::to_string(i) + "]",
                                     std::to_string(chain[i].block_count())};
          ReportWriter::append(f, curve[i].power);
          ReportWriter::append(f, curve[i].value);
          w.record(f);
        }
        const bool ends_at_atoms = chain.back().is_atoms();
        const bool final_zero = curve.back().power.is_zero();
        w.record({"summary", "ends_at_atoms", ends_at_atoms ? "1" : "0"});
        w.record({"summary", "final_gap_zero", final_zero ? "1" : "0"});
      });
      for (std::size_t i = 0; i < curve.size(); ++i)
        human << "chain[" << i << "] blocks=" << chain[i].block_count()
              << " gap^p=" << curve[i].power.to_string() << "\n";
      const bool ok = !chain.back().is_atoms() || curve.back().power.is_zero();
      return ok ? kExitPass : kExitMismatch;
    };
    if (cfg.family.generated)
      return chain_run(rademacher_l1_family(cfg.family.members, cfg.family.level));
    if (cfg.family.value_type == ValueType::finite_dim)
      return chain_run(build_explicit_family<FiniteDimVector>(space, cfg.family));
    return chain_run(build_explicit_family<SparseSeqVector>(space, cfg.family));
  } catch (const ConfigError& e) {
    human << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidArgumentError& e) {
    human << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const SpaceMismatchError& e) {
    human << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace lpcompact::cli
