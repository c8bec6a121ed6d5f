#pragma once

// Experiment configuration: strict JSON (unknown keys rejected, errors name
// the exact field path), defaults filled on parse, and a canonical resolved
// form whose hash is embedded in every output.

#include <optional>
#include <string>
#include <vector>

#include "anisofrac/audit.hpp"
#include "anisofrac/nonlinearity.hpp"
#include "anisofrac/quadrature.hpp"
#include "anisofrac/sample.hpp"
#include "anisofrac/solver.hpp"

namespace afs {

struct SweepSchedule {
  std::vector<int> axes;             // varying axes, pinned at 1 in the limit
  std::string schedule = "one_minus_pow2";  // s_k = 1 - 2^{-k}
  int k_from = 1, k_to = 7;
  std::vector<double> values;        // explicit alternative to the schedule

  std::vector<double> schedule_values() const;  // strictly increasing toward 1
};

enum class ProblemKind { Energy, Bbm, Ms, Dirichlet, Stability, GroundState, Audit };

struct ExperimentConfig {
  GridSpec grid;
  // fixed params; for sweeps the varying axes hold the limit value 1
  AnisoParams params;
  std::optional<SweepSchedule> sweep;
  QuadratureSpec quadrature;
  SolveOptions solver;

  ProblemKind kind = ProblemKind::Energy;
  std::string kind_name = "energy";
  Expression function;          // energy / bbm / ms
  int axis = 0;                 // bbm / ms / energy
  double p_scalar = 2.0;        // bbm / ms
  std::vector<double> s_list;   // bbm / ms
  Expression source;            // dirichlet / stability
  Nonlinearity nonlinearity;    // ground_state
  double distance_r = 2.0;      // ground_state sweep distance exponent
  // audit fields
  unsigned long long audit_seed = 42;
  int audit_trials = 100;
  std::vector<double> audit_p_grid{1.5, 2.0, 3.0};
  std::vector<double> audit_s_grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  int audit_mollify_radius = 1;
  std::vector<double> audit_truncate_ks;

  std::string output_dir = "out";
  int precision = 12;

  // resolved members of a sweep (params with the varying axes at s_k) and the
  // limit itself
  std::vector<AnisoParams> sweep_members() const;

  std::string canonical_json() const;  // resolved config, sorted keys
  std::string config_hash() const;     // fnv1a-64 hex of canonical_json()
};

ExperimentConfig parse_config(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text);

}  // namespace afs
