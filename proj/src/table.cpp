#include "anisofrac/table.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace afs {

void fill_errors(SweepRow& r) {
  r.abs_err = std::abs(r.value - r.reference);
  r.rel_err = r.reference != 0.0 ? r.abs_err / std::abs(r.reference) : 0.0;
}

std::string SweepTable::to_csv(int precision) const {
  if (precision < 1 || precision > 17) throw std::invalid_argument("csv precision must be 1..17");
  std::string out;
  out += "# config=" + config_hash + " seed=" + std::to_string(seed) + " kind=" + kind + "\n";
  out += "param,value,reference,abs_err,rel_err,near,mid,tail,flags\n";
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.*e", precision, v);
    out += buf;
  };
  for (const auto& r : rows) {
    num(r.param);
    out += ',';
    num(r.value);
    out += ',';
    num(r.reference);
    out += ',';
    num(r.abs_err);
    out += ',';
    num(r.rel_err);
    out += ',';
    num(r.near);
    out += ',';
    num(r.mid);
    out += ',';
    num(r.tail);
    out += ',';
    out += r.flags;
    out += '\n';
  }
  return out;
}

}  // namespace afs
