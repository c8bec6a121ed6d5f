#include "anisofrac/provenance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace afs {

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

void write_output(const std::string& dir, const std::string& stem, const std::string& csv,
                  const std::string& canonical_config, const std::string& config_hash,
                  unsigned long long seed, const std::string& kind,
                  const std::vector<std::string>& notes,
                  const std::vector<std::string>& column_notes, const std::string& extra_json) {
  std::filesystem::create_directories(dir);
  const std::string csv_path = dir + "/" + stem + ".csv";
  {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write: " + csv_path);
    out << csv;
  }
  nlohmann::json meta;
  meta["kind"] = kind;
  meta["config"] = nlohmann::json::parse(canonical_config);
  meta["config_hash"] = config_hash;
  meta["seed"] = seed;
  meta["csv"] = stem + ".csv";
  meta["csv_digest"] = fnv1a64_hex(csv);
  meta["notes"] = notes;
  meta["column_notes"] = column_notes;
  meta["version"] = kVersion;
  meta["timestamp_unix_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::system_clock::now().time_since_epoch())
          .count();
  if (!extra_json.empty()) meta["extra"] = nlohmann::json::parse(extra_json);
  std::ofstream out(dir + "/" + stem + ".meta.json");
  if (!out) throw std::runtime_error("cannot write sidecar for: " + csv_path);
  out << meta.dump(2) << "\n";
}

VerifyResult verify_output_dir(const std::string& dir) {
  VerifyResult res;
  if (!std::filesystem::is_directory(dir)) {
    res.ok = false;
    res.lines.push_back("FAIL not a directory: " + dir);
    return res;
  }
  std::vector<std::filesystem::path> metas;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto& p = entry.path();
    if (p.string().size() >= 10 && p.string().ends_with(".meta.json")) metas.push_back(p);
  }
  std::sort(metas.begin(), metas.end());
  if (metas.empty()) {
    res.ok = false;
    res.lines.push_back("FAIL no .meta.json sidecars in " + dir);
    return res;
  }
  for (const auto& mp : metas) {
    try {
      const auto meta = nlohmann::json::parse(read_file(mp.string()));
      const std::string recorded_hash = meta.at("config_hash").get<std::string>();
      const std::string recomputed = fnv1a64_hex(meta.at("config").dump());
      bool ok = recorded_hash == recomputed;
      std::string line = mp.filename().string() + ": config_hash " +
                         (ok ? "ok" : "MISMATCH (" + recomputed + " != " + recorded_hash + ")");
      if (meta.contains("csv")) {
        const std::string csv_path = dir + "/" + meta.at("csv").get<std::string>();
        const std::string bytes = read_file(csv_path);
        const std::string digest = fnv1a64_hex(bytes);
        const bool csv_ok = digest == meta.at("csv_digest").get<std::string>();
        // the CSV provenance comment must carry the same config hash
        const bool head_ok = bytes.rfind("# config=" + recorded_hash, 0) == 0;
        ok = ok && csv_ok && head_ok;
        line += std::string(", csv_digest ") + (csv_ok ? "ok" : "MISMATCH") +
                ", csv_header " + (head_ok ? "ok" : "MISMATCH");
      }
      res.lines.push_back((ok ? "OK   " : "FAIL ") + line);
      res.ok = res.ok && ok;
    } catch (const std::exception& e) {
      res.ok = false;
      res.lines.push_back("FAIL " + mp.filename().string() + ": " + e.what());
    }
  }
  return res;
}

}  // namespace afs
