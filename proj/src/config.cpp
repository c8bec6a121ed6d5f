#include "anisofrac/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "anisofrac/provenance.hpp"
#include "json.hpp"

namespace afs {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw std::invalid_argument("config: " + path + ": " + msg);
}

void check_keys(const json& j, const std::vector<std::string>& allowed, const std::string& path) {
  if (!j.is_object()) fail(path, "must be an object");
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const auto& k : allowed)
      if (item.key() == k) ok = true;
    if (!ok) fail(path, "unknown key '" + item.key() + "'");
  }
}

template <class T>
T get_or(const json& j, const char* key, T def) {
  if (!j.contains(key)) return def;
  return j.at(key).get<T>();
}

Expression parse_expression(const json& j, const std::string& path) {
  check_keys(j, {"kind", "amplitude", "center", "width", "box", "mode", "degree"}, path);
  Expression e;
  e.kind = get_or<std::string>(j, "kind", "zero");
  e.amplitude = get_or<double>(j, "amplitude", 1.0);
  e.center = get_or<std::vector<double>>(j, "center", {});
  e.width = get_or<std::vector<double>>(j, "width", {});
  if (j.contains("box")) {
    for (const auto& b : j.at("box")) {
      if (!b.is_array() || b.size() != 2) fail(path + ".box", "entries must be [lo, hi]");
      e.box_lo.push_back(b.at(0).get<double>());
      e.box_hi.push_back(b.at(1).get<double>());
    }
  }
  e.mode = get_or<std::vector<int>>(j, "mode", {});
  e.degree = get_or<std::vector<int>>(j, "degree", {});
  return e;
}

json expression_json(const Expression& e) {
  json j;
  j["kind"] = e.kind;
  j["amplitude"] = e.amplitude;
  if (!e.center.empty()) j["center"] = e.center;
  if (!e.width.empty()) j["width"] = e.width;
  if (!e.box_lo.empty()) {
    json box = json::array();
    for (std::size_t i = 0; i < e.box_lo.size(); ++i) box.push_back({e.box_lo[i], e.box_hi[i]});
    j["box"] = box;
  }
  if (!e.mode.empty()) j["mode"] = e.mode;
  if (!e.degree.empty()) j["degree"] = e.degree;
  return j;
}

}  // namespace

std::vector<double> SweepSchedule::schedule_values() const {
  std::vector<double> out;
  if (!values.empty()) {
    out = values;
  } else if (schedule == "one_minus_pow2") {
    for (int k = k_from; k <= k_to; ++k) out.push_back(1.0 - std::pow(2.0, -k));
  } else {
    throw std::invalid_argument("config: params.sweep.schedule '" + schedule + "' is unknown");
  }
  if (out.empty()) throw std::invalid_argument("config: params.sweep produces no members");
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!(out[i] > 0.0) || out[i] >= 1.0)
      throw std::invalid_argument("config: params.sweep values must lie in (0,1)");
    if (i > 0 && !(out[i] > out[i - 1]))
      throw std::invalid_argument("config: params.sweep values must be strictly increasing");
  }
  return out;
}

std::vector<AnisoParams> ExperimentConfig::sweep_members() const {
  if (!sweep) return {};
  std::vector<AnisoParams> members;
  for (double sk : sweep->schedule_values()) {
    AnisoParams prm = params;
    for (int axis : sweep->axes) prm.s[static_cast<std::size_t>(axis)] = sk;
    members.push_back(std::move(prm));
  }
  return members;
}

ExperimentConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

ExperimentConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: not well-formed JSON: ") + e.what());
  }
  check_keys(j, {"grid", "params", "quadrature", "problem", "solver", "output"}, "config");
  if (!j.contains("grid")) fail("config", "missing required section 'grid'");
  if (!j.contains("params")) fail("config", "missing required section 'params'");
  if (!j.contains("problem")) fail("config", "missing required section 'problem'");

  ExperimentConfig cfg;

  {
    const json& g = j.at("grid");
    check_keys(g, {"dim", "bounds", "cells", "margin"}, "grid");
    cfg.grid.dim = get_or<int>(g, "dim", 1);
    if (!g.contains("bounds")) fail("grid", "missing 'bounds'");
    for (const auto& b : g.at("bounds")) {
      if (!b.is_array() || b.size() != 2) fail("grid.bounds", "entries must be [lo, hi]");
      cfg.grid.lo.push_back(b.at(0).get<double>());
      cfg.grid.hi.push_back(b.at(1).get<double>());
    }
    cfg.grid.cells = get_or<std::vector<int>>(g, "cells", {});
    cfg.grid.margin = get_or<std::vector<int>>(g, "margin", std::vector<int>(cfg.grid.dim, 1));
    cfg.grid.validate();
  }

  {
    const json& p = j.at("params");
    check_keys(p, {"s", "p", "sweep"}, "params");
    cfg.params.s = get_or<std::vector<double>>(p, "s", {});
    cfg.params.p = get_or<std::vector<double>>(p, "p", {});
    if (p.contains("sweep")) {
      const json& w = p.at("sweep");
      check_keys(w, {"axes", "schedule", "k_from", "k_to", "values"}, "params.sweep");
      SweepSchedule sw;
      sw.axes = get_or<std::vector<int>>(w, "axes", {0});
      sw.schedule = get_or<std::string>(w, "schedule", "one_minus_pow2");
      sw.k_from = get_or<int>(w, "k_from", 1);
      sw.k_to = get_or<int>(w, "k_to", 7);
      sw.values = get_or<std::vector<double>>(w, "values", {});
      for (int a : sw.axes) {
        if (a < 0 || a >= cfg.grid.dim) fail("params.sweep.axes", "axis out of range");
        cfg.params.s[static_cast<std::size_t>(a)] = 1.0;  // the limit pins them at 1
      }
      sw.schedule_values();  // validates monotonicity and range now
      cfg.sweep = std::move(sw);
    }
    cfg.params.validate();
    if (cfg.params.dim() != cfg.grid.dim) fail("params", "s/p length must equal grid.dim");
  }

  if (j.contains("quadrature")) {
    const json& q = j.at("quadrature");
    check_keys(q, {"near_cut", "ratio", "nodes_per_interval", "tail_cut"}, "quadrature");
    cfg.quadrature.near_cut = get_or<double>(q, "near_cut", 1.0);
    cfg.quadrature.ratio = get_or<double>(q, "ratio", 1.05);
    cfg.quadrature.nodes_per_interval = get_or<int>(q, "nodes_per_interval", 3);
    cfg.quadrature.tail_cut = get_or<double>(q, "tail_cut", 0.0);
    cfg.quadrature.validate();
  }

  if (j.contains("solver")) {
    const json& s = j.at("solver");
    check_keys(s,
               {"max_iter", "grad_tol", "step_rule", "fixed_step", "armijo", "max_backtracks",
                "seed", "init_amplitude", "bump_width_frac", "bump_amplitude", "perturb"},
               "solver");
    cfg.solver.max_iter = get_or<int>(s, "max_iter", 2000);
    cfg.solver.grad_tol = get_or<double>(s, "grad_tol", 1e-8);
    const std::string rule = get_or<std::string>(s, "step_rule", "bb");
    if (rule == "bb")
      cfg.solver.step_rule = StepRule::BarzilaiBorwein;
    else if (rule == "fixed")
      cfg.solver.step_rule = StepRule::Fixed;
    else
      fail("solver.step_rule", "must be 'bb' or 'fixed'");
    cfg.solver.fixed_step = get_or<double>(s, "fixed_step", 0.0);
    cfg.solver.armijo = get_or<double>(s, "armijo", 1e-4);
    cfg.solver.max_backtracks = get_or<int>(s, "max_backtracks", 60);
    cfg.solver.seed = get_or<unsigned long long>(s, "seed", 0);
    cfg.solver.init_amplitude = get_or<double>(s, "init_amplitude", 0.0);
    cfg.solver.bump_width_frac = get_or<double>(s, "bump_width_frac", 0.5);
    cfg.solver.bump_amplitude = get_or<double>(s, "bump_amplitude", 1.0);
    cfg.solver.perturb = get_or<double>(s, "perturb", 0.0);
    cfg.solver.validate();
  }

  {
    const json& pr = j.at("problem");
    const std::string kind = pr.contains("kind") ? pr.at("kind").get<std::string>() : "";
    cfg.kind_name = kind;
    if (kind == "energy" || kind == "bbm" || kind == "ms") {
      check_keys(pr, {"kind", "function", "axis", "p", "s_list"}, "problem");
      cfg.kind = kind == "energy" ? ProblemKind::Energy
                                  : (kind == "bbm" ? ProblemKind::Bbm : ProblemKind::Ms);
      if (!pr.contains("function")) fail("problem", "missing 'function'");
      cfg.function = parse_expression(pr.at("function"), "problem.function");
      cfg.axis = get_or<int>(pr, "axis", 0);
      cfg.p_scalar = get_or<double>(pr, "p", 2.0);
      cfg.s_list = get_or<std::vector<double>>(pr, "s_list", {});
      if (cfg.axis < 0 || cfg.axis >= cfg.grid.dim) fail("problem.axis", "out of range");
      if (!(cfg.p_scalar > 1.0)) fail("problem.p", "outside (1,inf)");
      if (kind != "energy" && cfg.s_list.empty()) fail("problem.s_list", "must be non-empty");
    } else if (kind == "dirichlet" || kind == "stability") {
      check_keys(pr, {"kind", "source"}, "problem");
      cfg.kind = kind == "dirichlet" ? ProblemKind::Dirichlet : ProblemKind::Stability;
      if (!pr.contains("source")) fail("problem", "missing 'source'");
      cfg.source = parse_expression(pr.at("source"), "problem.source");
      if (kind == "stability" && !cfg.sweep)
        fail("problem", "stability requires params.sweep");
    } else if (kind == "ground_state") {
      check_keys(pr, {"kind", "nonlinearity", "distance_r"}, "problem");
      cfg.kind = ProblemKind::GroundState;
      if (!pr.contains("nonlinearity")) fail("problem", "missing 'nonlinearity'");
      const json& nl = pr.at("nonlinearity");
      check_keys(nl, {"kind", "q", "mu", "C", "weight"}, "problem.nonlinearity");
      cfg.nonlinearity.kind = get_or<std::string>(nl, "kind", "pure_power");
      cfg.nonlinearity.q = get_or<double>(nl, "q", 4.0);
      cfg.nonlinearity.mu = get_or<double>(nl, "mu", 0.0);
      cfg.nonlinearity.C = get_or<double>(nl, "C", 1.0);
      if (nl.contains("weight"))
        cfg.nonlinearity.weight =
            parse_expression(nl.at("weight"), "problem.nonlinearity.weight");
      cfg.distance_r = get_or<double>(pr, "distance_r", 2.0);
      // subcriticality against the limit exponents, checked at parse time
      try {
        cfg.nonlinearity.validate_against(cfg.params, cfg.grid.dim);
      } catch (const std::exception& e) {
        fail("problem.nonlinearity", e.what());
      }
    } else if (kind == "audit") {
      check_keys(pr, {"kind", "seed", "trials", "p_grid", "s_grid", "mollify_radius",
                      "truncate_ks"},
                 "problem");
      cfg.kind = ProblemKind::Audit;
      cfg.audit_seed = get_or<unsigned long long>(pr, "seed", 42);
      cfg.audit_trials = get_or<int>(pr, "trials", 100);
      cfg.audit_p_grid = get_or<std::vector<double>>(pr, "p_grid", cfg.audit_p_grid);
      cfg.audit_s_grid = get_or<std::vector<double>>(pr, "s_grid", cfg.audit_s_grid);
      cfg.audit_mollify_radius = get_or<int>(pr, "mollify_radius", 1);
      cfg.audit_truncate_ks = get_or<std::vector<double>>(pr, "truncate_ks", {});
      if (cfg.audit_trials < 0) fail("problem.trials", "must be >= 0");
    } else {
      fail("problem.kind",
           "must be one of energy|bbm|ms|dirichlet|stability|ground_state|audit");
    }
  }

  if (j.contains("output")) {
    const json& o = j.at("output");
    check_keys(o, {"directory", "precision"}, "output");
    cfg.output_dir = get_or<std::string>(o, "directory", "out");
    cfg.precision = get_or<int>(o, "precision", 12);
    if (cfg.precision < 1 || cfg.precision > 17) fail("output.precision", "must be in 1..17");
  }

  return cfg;
}

std::string ExperimentConfig::canonical_json() const {
  json j;
  json g;
  g["dim"] = grid.dim;
  json bounds = json::array();
  for (int a = 0; a < grid.dim; ++a) bounds.push_back({grid.lo[a], grid.hi[a]});
  g["bounds"] = bounds;
  g["cells"] = grid.cells;
  g["margin"] = grid.margin;
  j["grid"] = g;

  json p;
  p["s"] = params.s;
  p["p"] = params.p;
  if (sweep) {
    json w;
    w["axes"] = sweep->axes;
    w["schedule"] = sweep->schedule;
    w["k_from"] = sweep->k_from;
    w["k_to"] = sweep->k_to;
    if (!sweep->values.empty()) w["values"] = sweep->values;
    p["sweep"] = w;
  }
  j["params"] = p;

  json q;
  q["near_cut"] = quadrature.near_cut;
  q["ratio"] = quadrature.ratio;
  q["nodes_per_interval"] = quadrature.nodes_per_interval;
  q["tail_cut"] = quadrature.tail_cut;
  j["quadrature"] = q;

  json s;
  s["max_iter"] = solver.max_iter;
  s["grad_tol"] = solver.grad_tol;
  s["step_rule"] = solver.step_rule == StepRule::BarzilaiBorwein ? "bb" : "fixed";
  s["fixed_step"] = solver.fixed_step;
  s["armijo"] = solver.armijo;
  s["max_backtracks"] = solver.max_backtracks;
  s["seed"] = solver.seed;
  s["init_amplitude"] = solver.init_amplitude;
  s["bump_width_frac"] = solver.bump_width_frac;
  s["bump_amplitude"] = solver.bump_amplitude;
  s["perturb"] = solver.perturb;
  j["solver"] = s;

  json pr;
  pr["kind"] = kind_name;
  switch (kind) {
    case ProblemKind::Energy:
    case ProblemKind::Bbm:
    case ProblemKind::Ms:
      pr["function"] = expression_json(function);
      pr["axis"] = axis;
      pr["p"] = p_scalar;
      if (!s_list.empty()) pr["s_list"] = s_list;
      break;
    case ProblemKind::Dirichlet:
    case ProblemKind::Stability:
      pr["source"] = expression_json(source);
      break;
    case ProblemKind::GroundState: {
      json nl;
      nl["kind"] = nonlinearity.kind;
      nl["q"] = nonlinearity.q;
      nl["mu"] = nonlinearity.mu;
      nl["C"] = nonlinearity.C;
      if (nonlinearity.weight) nl["weight"] = expression_json(*nonlinearity.weight);
      pr["nonlinearity"] = nl;
      pr["distance_r"] = distance_r;
      break;
    }
    case ProblemKind::Audit:
      pr["seed"] = audit_seed;
      pr["trials"] = audit_trials;
      pr["p_grid"] = audit_p_grid;
      pr["s_grid"] = audit_s_grid;
      pr["mollify_radius"] = audit_mollify_radius;
      if (!audit_truncate_ks.empty()) pr["truncate_ks"] = audit_truncate_ks;
      break;
  }
  j["problem"] = pr;

  json o;
  o["directory"] = output_dir;
  o["precision"] = precision;
  j["output"] = o;

  return j.dump();
}

std::string ExperimentConfig::config_hash() const { return fnv1a64_hex(canonical_json()); }

}  // namespace afs
