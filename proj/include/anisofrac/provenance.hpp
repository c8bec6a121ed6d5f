#pragma once

// Output provenance: content hashing, JSON sidecars, and the verifier that
// re-hashes an output directory.

#include <string>
#include <vector>

namespace afs {

inline constexpr const char* kVersion = "0.1.0";

std::string fnv1a64_hex(const std::string& bytes);

// Writes `csv` to <dir>/<stem>.csv and a sidecar <dir>/<stem>.meta.json
// holding the resolved config, its hash, the CSV digest, notes, and the wall
// clock (the only place a timestamp appears).
void write_output(const std::string& dir, const std::string& stem, const std::string& csv,
                  const std::string& canonical_config, const std::string& config_hash,
                  unsigned long long seed, const std::string& kind,
                  const std::vector<std::string>& notes,
                  const std::vector<std::string>& column_notes,
                  const std::string& extra_json = "");

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> lines;  // one per checked file
};

// Re-hashes every *.meta.json / *.csv pair under dir.
VerifyResult verify_output_dir(const std::string& dir);

}  // namespace afs
