#pragma once

// Sweep tables and their CSV form. One file per sweep, header line
//   param,value,reference,abs_err,rel_err,near,mid,tail,flags
// preceded by a single provenance comment (config hash + seed). All numeric
// formatting is fixed-precision scientific so identical runs diff as text.

#include <string>
#include <vector>

namespace afs {

struct SweepRow {
  double param = 0.0;
  double value = 0.0;
  double reference = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double near = 0.0, mid = 0.0, tail = 0.0;
  std::string flags;  // semicolon-separated tokens, no commas
};

struct SweepTable {
  std::string kind;             // bbm / ms / stability / ground_state / energy
  std::string config_hash;      // hex digest of the resolved config
  unsigned long long seed = 0;
  std::vector<std::string> notes;         // surfaced in the JSON sidecar
  std::vector<std::string> column_notes;  // per-kind column semantics
  std::vector<SweepRow> rows;

  void push(SweepRow r) { rows.push_back(std::move(r)); }
  std::string to_csv(int precision = 12) const;
};

// abs/rel error helpers (rel against |reference|, 0 when reference is 0)
void fill_errors(SweepRow& r);

}  // namespace afs
