#include "anisofrac/runner.hpp"

#include <filesystem>
#include <fstream>

#include "anisofrac/provenance.hpp"
#include "anisofrac/sweeps.hpp"
#include "json.hpp"

namespace afs {

using nlohmann::json;

namespace {

json solve_meta(const SolveResult& r) {
  json j;
  j["energy"] = r.energy;
  j["residual"] = r.residual;
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  for (const auto& [k, v] : r.metadata) j["metadata"][k] = v;
  return j;
}

json ground_meta(const GroundStateResult& r) {
  json j;
  j["level"] = r.level;
  j["nehari_residual"] = r.nehari_residual;
  j["residual"] = r.residual;
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  for (const auto& [k, v] : r.metadata) j["metadata"][k] = v;
  return j;
}

}  // namespace

RunOutcome run_experiment(const ExperimentConfig& cfg, const std::string& output_dir_override) {
  RunOutcome out;
  const std::string dir = output_dir_override.empty() ? cfg.output_dir : output_dir_override;
  std::filesystem::create_directories(dir);
  const std::string hash = cfg.config_hash();
  const std::string canon = cfg.canonical_json();
  json summary;
  summary["kind"] = cfg.kind_name;
  summary["config_hash"] = hash;

  auto emit_table = [&](SweepTable t, const std::string& stem, unsigned long long seed,
                        const std::string& extra = "") {
    t.config_hash = hash;
    t.seed = seed;
    write_output(dir, stem, t.to_csv(cfg.precision), canon, hash, seed, t.kind, t.notes,
                 t.column_notes, extra);
    out.outputs.push_back(stem + ".csv");
    out.outputs.push_back(stem + ".meta.json");
  };

  switch (cfg.kind) {
    case ProblemKind::Energy: {
      const GridFunction u = sample(cfg.function, cfg.grid);
      const EnergyBreakdown br = total_energy(u, cfg.params, cfg.quadrature);
      SweepTable t;
      t.kind = "energy";
      for (int i = 0; i < cfg.grid.dim; ++i) {
        SweepRow r;
        r.param = i;
        r.value = br.per_direction[static_cast<std::size_t>(i)];
        r.near = br.near_part[static_cast<std::size_t>(i)];
        r.mid = br.mid_part[static_cast<std::size_t>(i)];
        r.tail = br.tail_part[static_cast<std::size_t>(i)];
        t.push(std::move(r));
      }
      SweepRow total;
      total.param = -1;
      total.value = br.total;
      total.flags = "total";
      t.push(std::move(total));
      t.column_notes = {"param=axis (-1: weighted total)", "value=J_i or total"};
      emit_table(std::move(t), "energy", 0);
      summary["total"] = br.total;
      break;
    }
    case ProblemKind::Bbm: {
      const GridFunction u = sample(cfg.function, cfg.grid);
      emit_table(bbm_sweep(u, cfg.axis, cfg.p_scalar, cfg.s_list, cfg.quadrature), "bbm", 0);
      break;
    }
    case ProblemKind::Ms: {
      const GridFunction u = sample(cfg.function, cfg.grid);
      emit_table(ms_sweep(u, cfg.axis, cfg.p_scalar, cfg.s_list, cfg.quadrature), "ms", 0);
      break;
    }
    case ProblemKind::Dirichlet: {
      const GridFunction f = sample(cfg.source, cfg.grid);
      const SolveResult r = solve_dirichlet(f, cfg.params, cfg.quadrature, cfg.solver);
      write_grid_csv(r.u, dir + "/solution.csv");
      out.outputs.push_back("solution.csv");
      SweepTable t;
      t.kind = "dirichlet";
      SweepRow row;
      row.param = 0;
      row.value = r.energy;
      row.near = r.residual;
      row.mid = r.iterations;
      row.flags = r.converged ? "converged" : "not_converged";
      t.push(std::move(row));
      t.column_notes = {"value=I(u)", "near=residual", "mid=iterations"};
      emit_table(std::move(t), "dirichlet", cfg.solver.seed, solve_meta(r).dump());
      summary["solve"] = solve_meta(r);
      if (!r.converged) out.exit_code = 1;
      break;
    }
    case ProblemKind::Stability: {
      const GridFunction f = sample(cfg.source, cfg.grid);
      const auto members = cfg.sweep_members();
      const auto res = stability_sweep(members, cfg.params, f, cfg.quadrature, cfg.solver);
      write_grid_csv(res.limit.u, dir + "/limit_solution.csv");
      out.outputs.push_back("limit_solution.csv");
      json extra;
      extra["limit"] = solve_meta(res.limit);
      emit_table(res.table, "stability", cfg.solver.seed, extra.dump());
      summary["limit"] = solve_meta(res.limit);
      bool all_ok = res.limit.converged;
      for (const auto& m : res.members) all_ok = all_ok && m.converged;
      if (!all_ok) out.exit_code = 1;
      break;
    }
    case ProblemKind::GroundState: {
      const auto members = cfg.sweep_members();
      if (members.empty())
        throw std::invalid_argument("ground_state requires params.sweep");
      const auto res = ground_state_sweep(members, cfg.params, cfg.grid, cfg.nonlinearity,
                                          cfg.quadrature, cfg.solver, cfg.distance_r);
      write_grid_csv(res.limit.u, dir + "/limit_solution.csv");
      out.outputs.push_back("limit_solution.csv");
      json extra;
      extra["limit"] = ground_meta(res.limit);
      emit_table(res.table, "ground_state", cfg.solver.seed, extra.dump());
      summary["limit"] = ground_meta(res.limit);
      bool all_ok = res.limit.converged;
      for (const auto& m : res.members) all_ok = all_ok && m.converged;
      if (!all_ok) out.exit_code = 1;
      break;
    }
    case ProblemKind::Audit: {
      AuditOptions ao;
      ao.grid = cfg.grid;
      ao.quad = cfg.quadrature;
      ao.seed = cfg.audit_seed;
      ao.trials = cfg.audit_trials;
      ao.p_grid = cfg.audit_p_grid;
      ao.s_grid = cfg.audit_s_grid;
      ao.mollify_radius = cfg.audit_mollify_radius;
      ao.truncate_ks = cfg.audit_truncate_ks;
      ao.dump_dir = dir;
      const AuditReport rep = inequality_audit(ao);
      emit_table(audit_table(rep), "audit", rep.seed);
      summary["passed"] = rep.passed;
      summary["violations"] = rep.violation_notes;
      if (!rep.passed) out.exit_code = 1;
      break;
    }
  }

  summary["exit_code"] = out.exit_code;
  summary["outputs"] = out.outputs;
  out.summary_json = summary.dump(2);
  if (out.exit_code != 0) {
    std::ofstream f(dir + "/failure.json");
    f << out.summary_json << "\n";
  }
  return out;
}

}  // namespace afs
