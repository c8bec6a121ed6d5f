#include "anisofrac/sample.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace afs {

namespace {

void need_len(const std::vector<double>& v, int dim, const char* what) {
  if (static_cast<int>(v.size()) != dim)
    throw std::invalid_argument(std::string("expression.") + what + " must have dim entries");
}

bool known_kind(const std::string& k) {
  return k == "zero" || k == "tent" || k == "bump" || k == "indicator" || k == "sine" ||
         k == "polybump";
}

}  // namespace

void Expression::validate(int dim) const {
  if (!known_kind(kind))
    throw std::invalid_argument("expression.kind '" + kind + "' is not in the registry");
  if (kind == "zero") return;
  if (kind == "tent" || kind == "bump" || kind == "polybump") {
    need_len(center, dim, "center");
    need_len(width, dim, "width");
    for (int a = 0; a < dim; ++a)
      if (!(width[a] > 0))
        throw std::invalid_argument("expression.width[" + std::to_string(a) + "] must be > 0");
    if (kind == "polybump" && !degree.empty() && static_cast<int>(degree.size()) != dim)
      throw std::invalid_argument("expression.degree must have dim entries");
  } else {  // indicator / sine
    need_len(box_lo, dim, "box_lo");
    need_len(box_hi, dim, "box_hi");
    for (int a = 0; a < dim; ++a)
      if (!(box_hi[a] > box_lo[a]))
        throw std::invalid_argument("expression.box[" + std::to_string(a) + "] is empty");
    if (kind == "sine" && !mode.empty()) {
      if (static_cast<int>(mode.size()) != dim)
        throw std::invalid_argument("expression.mode must have dim entries");
      for (int a = 0; a < dim; ++a)
        if (mode[a] < 1)
          throw std::invalid_argument("expression.mode[" + std::to_string(a) + "] must be >= 1");
    }
  }
}

void Expression::support(int dim, std::vector<double>& slo, std::vector<double>& shi) const {
  validate(dim);
  slo.assign(dim, 0.0);
  shi.assign(dim, 0.0);
  if (kind == "zero") return;
  for (int a = 0; a < dim; ++a) {
    if (kind == "tent" || kind == "bump" || kind == "polybump") {
      slo[a] = center[a] - 0.5 * width[a];
      shi[a] = center[a] + 0.5 * width[a];
    } else {
      slo[a] = box_lo[a];
      shi[a] = box_hi[a];
    }
  }
}

double Expression::operator()(const std::vector<double>& x) const {
  const int dim = static_cast<int>(x.size());
  if (kind == "zero") return 0.0;
  if (kind == "tent") {
    double v = amplitude;
    for (int a = 0; a < dim; ++a) {
      const double t = 1.0 - 2.0 * std::abs(x[a] - center[a]) / width[a];
      if (t <= 0.0) return 0.0;
      v *= t;
    }
    return v;
  }
  if (kind == "bump" || kind == "polybump") {
    double r2 = 0.0;
    for (int a = 0; a < dim; ++a) {
      const double t = 2.0 * (x[a] - center[a]) / width[a];
      r2 += t * t;
    }
    if (r2 >= 1.0) return 0.0;
    double v = amplitude * std::exp(-1.0 / (1.0 - r2));
    if (kind == "polybump" && !degree.empty()) {
      for (int a = 0; a < dim; ++a) {
        const double t = 2.0 * (x[a] - center[a]) / width[a];
        for (int d = 0; d < degree[a]; ++d) v *= t;
      }
    }
    return v;
  }
  if (kind == "indicator") {
    for (int a = 0; a < dim; ++a)
      if (x[a] < box_lo[a] || x[a] >= box_hi[a]) return 0.0;
    return amplitude;
  }
  // sine
  double v = amplitude;
  for (int a = 0; a < dim; ++a) {
    if (x[a] < box_lo[a] || x[a] > box_hi[a]) return 0.0;
    const int k = mode.empty() ? 1 : mode[a];
    v *= std::sin(k * std::numbers::pi * (x[a] - box_lo[a]) / (box_hi[a] - box_lo[a]));
  }
  return v;
}

GridFunction sample(const Expression& e, const GridSpec& spec) {
  spec.validate();
  e.validate(spec.dim);

  std::vector<double> slo, shi;
  e.support(spec.dim, slo, shi);
  if (e.kind != "zero") {
    const double tol = 1e-12;
    for (int a = 0; a < spec.dim; ++a) {
      if (slo[a] < spec.domain_lo(a) - tol || shi[a] > spec.domain_hi(a) + tol)
        throw std::invalid_argument(
            "expression support [" + std::to_string(slo[a]) + ", " + std::to_string(shi[a]) +
            "] exceeds the non-margin region on axis " + std::to_string(a));
    }
  }

  GridFunction u(spec);
  std::vector<double> x(spec.dim);
  std::vector<int> idx(spec.dim, 0);
  for (std::size_t flat = 0; flat < u.values.size(); ++flat) {
    for (int a = 0; a < spec.dim; ++a) x[a] = spec.node_coord(a, idx[a]);
    u.values[flat] = e(x);
    for (int a = spec.dim - 1; a >= 0; --a) {
      if (++idx[a] < spec.cells[a]) break;
      idx[a] = 0;
    }
  }
  u.zero_margin();
  u.check_invariants();
  return u;
}

}  // namespace afs
