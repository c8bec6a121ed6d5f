#pragma once

// Dispatch one parsed experiment to the library and write its outputs
// (CSV tables, solution dumps, JSON sidecars). Shared by the CLI and the
// acceptance suite so both exercise the same path.

#include <string>
#include <vector>

#include "anisofrac/config.hpp"

namespace afs {

struct RunOutcome {
  int exit_code = 0;           // 0 ok; 1 audit failure / non-convergence
  std::string summary_json;    // machine-readable result summary
  std::vector<std::string> outputs;  // files written (relative to out dir)
};

RunOutcome run_experiment(const ExperimentConfig& cfg, const std::string& output_dir_override = "");

}  // namespace afs
