// Batch front end: validate or run one experiment config, or verify the
// provenance of an output directory.

#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "anisofrac/provenance.hpp"
#include "anisofrac/reduce.hpp"
#include "anisofrac/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"anisofrac: directional fractional Sobolev energy laboratory"};
  app.require_subcommand(1);

  int threads = 0;
  std::string output_dir;
  app.add_option("--threads", threads, "cap worker threads (results are unchanged)");
  app.add_option("--output-dir", output_dir, "override the config's output directory");

  std::string run_path, validate_path, verify_dir;
  auto* run_cmd = app.add_subcommand("run", "run one experiment config");
  run_cmd->add_option("config", run_path, "config JSON path")->required();
  auto* val_cmd = app.add_subcommand("validate", "parse and validate a config");
  val_cmd->add_option("config", validate_path, "config JSON path")->required();
  auto* ver_cmd = app.add_subcommand("verify", "re-hash an output directory");
  ver_cmd->add_option("dir", verify_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);
  afs::set_max_threads(threads);

  try {
    if (run_cmd->parsed()) {
      const auto cfg = afs::parse_config(run_path);
      const auto outcome = afs::run_experiment(cfg, output_dir);
      std::cout << outcome.summary_json << "\n";
      return outcome.exit_code;
    }
    if (val_cmd->parsed()) {
      const auto cfg = afs::parse_config(validate_path);
      std::cout << "valid: kind=" << cfg.kind_name << " config_hash=" << cfg.config_hash()
                << "\n";
      return 0;
    }
    const auto res = afs::verify_output_dir(verify_dir);
    for (const auto& line : res.lines) std::cout << line << "\n";
    std::cout << (res.ok ? "verify: OK" : "verify: FAILED") << "\n";
    return res.ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
