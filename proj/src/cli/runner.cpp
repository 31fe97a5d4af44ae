#include "renq/cli/runner.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "renq/analysis/addressability.hpp"
#include "renq/analysis/blockade.hpp"
#include "renq/analysis/robustness.hpp"
#include "renq/core/constants.hpp"
#include "renq/core/errors.hpp"
#include "renq/gates/residual.hpp"
#include "renq/materials/field_optimizer.hpp"
#include "renq/materials/material.hpp"
#include "renq/materials/symmetry.hpp"
#include "renq/materials/units.hpp"
#include "renq/pulse/analytic.hpp"

namespace renq {

namespace {

constexpr const char* kVersion = "renq 0.1.0";
constexpr double kDeg = constants::pi / 180;

struct CommandName {
  Command c;
  const char* name;
};
constexpr CommandName kCommands[] = {
    {Command::speedup_curve, "speedup-curve"}, {Command::pi_pulse, "pi-pulse"},
    {Command::cnot_report, "cnot-report"},     {Command::optimize_angles, "optimize-angles"},
    {Command::stark_budget, "stark-budget"},   {Command::robustness, "robustness"},
    {Command::symmetry, "symmetry"},           {Command::material_dump, "material-dump"},
};

std::string num(double v) { return format_number(v); }

void common_metadata(ResultTable& t, const RunConfig& c) {
  t.metadata.push_back({"command", to_string(c.command)});
  t.metadata.push_back({"version", kVersion});
}

double or_default(const std::optional<double>& v, double d) { return v ? *v : d; }

std::vector<double> parse_error_grid(const std::string& spec) {
  if (spec.empty()) return error_grid(-2, -8, 0.25);
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 3) throw ParseError("grid", "expected lo:hi:decade_step");
  double lo = 0, hi = 0, step = 0;
  try {
    lo = std::stod(parts[0]);
    hi = std::stod(parts[1]);
    step = std::stod(parts[2]);
  } catch (const std::exception&) {
    throw ParseError("grid", "malformed number in '" + spec + "'");
  }
  if (!(lo > 0) || !(hi >= lo) || !(step > 0)) throw ParseError("grid", "need 0 < lo <= hi and step > 0");
  return error_grid(std::log10(hi), std::log10(lo), step);
}

ResultTable run_speedup(const RunConfig& c) {
  const auto errors = parse_error_grid(c.grid);
  OptimizerSettings s;
  s.model = c.model;
  PiPulseFrontier frontier(s);
  const SpeedupCurve curve = speedup_curve(errors, frontier);
  const OscillationSpacing osc = oscillation_spacing(frontier);
  ResultTable t;
  common_metadata(t, c);
  t.metadata.push_back({"model", c.model == ErrorModel::full ? "full" : "first_order"});
  t.metadata.push_back({"delta_omega_convention", "delta_omega/2 = J_dip/hbar"});
  t.metadata.push_back({"fit_a", num(curve.fit.a)});
  t.metadata.push_back({"fit_b", num(curve.fit.b)});
  t.metadata.push_back({"fit_window", num(curve.fit.error_lo) + ".." + num(curve.fit.error_hi)});
  t.metadata.push_back({"fit_points", std::to_string(curve.fit.points)});
  t.metadata.push_back({"oscillation_spacing", num(osc.mean_spacing)});
  t.metadata.push_back({"oscillation_expected", num(osc.expected)});
  t.metadata.push_back({"optimizer_rel_tol", num(s.rel_tol)});
  t.columns = {{"target_error", "1"},        {"T_pi", "1/delta_omega"},   {"blockade_time", "1/delta_omega"},
               {"direct_time", "1/delta_omega"}, {"speedup", "1"},          {"speedup_formula", "1"}};
  for (const auto& p : curve.points)
    t.add_row({p.numeric.target_error, p.single_t_pi_dw, p.numeric.blockade_time, p.numeric.direct_time,
               p.numeric.speedup, p.overlay});
  return t;
}

ResultTable run_pi_pulse(const RunConfig& c) {
  const double eps = or_default(c.target_error, 1e-3);
  OptimizerSettings s;
  s.model = c.model;
  const auto r = optimize_pi_pulse(eps, 1.0, s);
  const auto a = analytic_gate_time(eps);
  ResultTable t;
  common_metadata(t, c);
  t.metadata.push_back({"model", c.model == ErrorModel::full ? "full" : "first_order"});
  t.metadata.push_back({"detuning_grid", "64 log points over [1, 16] delta_omega_min, peak refinement"});
  t.columns = {{"target_error", "1"},          {"T_pi", "1/delta_omega_min"},  {"T_cut", "1/delta_omega_min"},
               {"T", "1/delta_omega_min"},     {"omega0", "delta_omega_min"},  {"max_error", "1"},
               {"worst_detuning", "delta_omega_min"}, {"analytic_first_order_T_pi", "1/delta_omega_min"}};
  t.add_row({eps, r.T_pi, r.T_cut, r.T, r.omega0, r.max_error, r.worst_detuning, a.T_pi_delta_omega});
  return t;
}

std::vector<Column> report_columns() {
  return {{"r", "m"},
          {"B", "T"},
          {"B_ac", "T"},
          {"theta", "deg"},
          {"phi", "deg"},
          {"total_time", "s"},
          {"F_min", "1"},
          {"dominant", "text"},
          {"err_coherence", "1"},
          {"err_activation", "1"},
          {"err_residual", "1"},
          {"t_cnot", "s"},
          {"t_act", "s"},
          {"t_x", "s"},
          {"echo_overhead", "s"},
          {"timed_total_time", "s"},
          {"timed_F_min", "1"},
          {"J_dip", "Hz"},
          {"mu_m", "mu_B"},
          {"nuclear_axis_angle", "deg"},
          {"asymmetry", "1"},
          {"rabi", "rad/s"},
          {"residual_process", "text"}};
}

std::vector<Cell> report_row(double r, double B, double B_ac, double th, double ph, const GateReport& g) {
  return {r,
          B,
          B_ac,
          th / kDeg,
          ph / kDeg,
          g.total_time,
          g.F_min,
          std::string(to_string(g.dominant)),
          g.breakdown.at(0).second,
          g.breakdown.at(1).second,
          g.breakdown.at(2).second,
          g.t_cnot,
          g.t_act,
          g.t_x,
          g.echo_overhead,
          g.timed_total_time,
          g.timed_F_min,
          g.J_dip,
          g.mu_m / constants::mu_B,
          g.nuclear_axis_angle / kDeg,
          g.asymmetry,
          g.rabi,
          g.residual_process};
}

ResultTable run_cnot(const RunConfig& c, bool always_optimize) {
  const MaterialRecord m = resolve_material(c.material);
  const double r = or_default(c.r, 10e-9);
  const double B = or_default(c.B, minimum_field(m.ion, 10.0));
  const double B_ac = or_default(c.B_ac, 1e-3);
  ResultTable t;
  common_metadata(t, c);
  t.metadata.push_back({"material", m.name});
  t.metadata.push_back({"geometry", "r perpendicular to the active moment"});
  t.metadata.push_back({"encoding", "electro-nuclear, passive {-I,-I+1}, active {lower -I, upper -I+1}"});
  t.columns = report_columns();

  AngleSearchSettings s;
  if (!always_optimize && c.theta && c.phi) {
    GateReport g;
    const double err = field_angle_objective(m, r, B, B_ac, *c.theta, *c.phi, s.options, &g);
    if (!std::isfinite(err)) throw InfeasibleError("cnot-report: no admissible gate at the requested field direction");
    t.metadata.push_back({"angles", "given"});
    t.metadata.push_back({"provenance", g.provenance});
    t.add_row(report_row(r, B, B_ac, *c.theta, *c.phi, g));
    return t;
  }
  if (c.theta || c.phi) throw InputError("cnot-report: give both theta and phi or neither");
  const AngleOptimization opt = optimize_field_angles(m, r, B, B_ac, FieldObjective::min_error, s);
  const FrameDiagnostic d = frame_diagnostic(m, r, B, B_ac, opt, 35 * kDeg, 132 * kDeg, s.options);
  t.metadata.push_back({"angles", "optimized (10 deg lattice + Nelder-Mead)"});
  t.metadata.push_back({"flat_landscape", opt.flat ? "yes" : "no"});
  t.metadata.push_back({"evaluations", std::to_string(opt.evaluations)});
  std::ostringstream mins;
  for (std::size_t i = 0; i < opt.minima.size() && i < 8; ++i)
    mins << (i ? "; " : "") << "(" << num(opt.minima[i].theta / kDeg) << " deg, " << num(opt.minima[i].phi / kDeg)
         << " deg, " << num(opt.minima[i].error) << ")";
  t.metadata.push_back({"local_minima", mins.str()});
  bool monotone = true;
  for (std::size_t i = 1; i < opt.log.size(); ++i) monotone = monotone && opt.log[i] <= opt.log[i - 1];
  t.metadata.push_back({"refinement_monotone", monotone ? "yes" : "no"});
  t.metadata.push_back({"reference_angles", "theta=35 deg, phi=132 deg"});
  t.metadata.push_back({"offset_from_reference_deg", num(d.offset / kDeg)});
  t.metadata.push_back({"error_at_reference", num(d.error_at_reference)});
  t.metadata.push_back({"provenance", opt.report.provenance});
  t.add_row(report_row(r, B, B_ac, opt.theta, opt.phi, opt.report));
  return t;
}

ResultTable run_stark(const RunConfig& c) {
  double coeff = 35e3;
  std::string coeff_source = "default 35 kHz/(V/cm)";
  const MaterialRecord m = resolve_material(c.material);
  if (m.stark_coefficient) {
    coeff = *m.stark_coefficient;
    coeff_source = m.name;
  }
  const double N = or_default(c.N, 1e4);
  const double r = or_default(c.r, 10e-9);
  std::vector<std::pair<double, double>> targets;
  if (c.F_act || c.F_cnot)
    targets.push_back({or_default(c.F_act, or_default(c.F_cnot, 0.99)), or_default(c.F_cnot, or_default(c.F_act, 0.99))});
  else
    targets = {{0.99, 0.99}, {0.9999, 0.9999}};
  ResultTable t;
  common_metadata(t, c);
  t.metadata.push_back({"stark_coefficient_source", coeff_source});
  t.columns = {{"N", "1"},       {"r", "m"},        {"F_act", "1"},          {"F_cnot", "1"},
               {"delta_omega_st", "rad/s"}, {"delta_E", "V/cm"}, {"stark_coefficient", "Hz/(V/cm)"}};
  for (auto [fa, fc] : targets) {
    const auto b = addressability_budget(N, r, fa, fc, coeff);
    t.add_row({b.N, b.r, b.F_act, b.F_CNOT, b.delta_omega_st, b.delta_E, b.stark_coefficient});
  }
  return t;
}

ResultTable run_robustness(const RunConfig& c) {
  const double r = or_default(c.r, 10e-9);
  const double B = or_default(c.B, 1.0);
  const double B_ac = or_default(c.B_ac, 1e-3);
  RegimeParams p = typical_regime(r, 0.0);
  p.E_Z = constants::mu_B * B / constants::h;
  RegimeParams q = p;
  q.g_perp_over_par = 1.0;
  const auto rb = robustness_budget(p, B_ac, r);
  const auto e0 = encoding_error_scaling(ActiveKind::electronic, p);
  const auto e1 = encoding_error_scaling(ActiveKind::electro_nuclear, q);
  ResultTable t;
  common_metadata(t, c);
  t.metadata.push_back({"regime", "A_J/h = 1 GHz, delta_CF/h = 100 GHz, E_Zn/h = 10 MHz, mu_m = mu_B, E_Z = mu_B B"});
  t.metadata.push_back({"residual_g_perp_zero_process", e0.process});
  t.metadata.push_back({"residual_g_perp_finite_process", e1.process});
  t.columns = {{"r", "m"},
               {"B", "T"},
               {"B_ac", "T"},
               {"J_dip", "Hz"},
               {"dphi_single", "rad"},
               {"dphi_cnot", "rad"},
               {"flip_suppression", "1"},
               {"J_hop", "Hz"},
               {"ops_single", "1"},
               {"ops_cnot", "1"},
               {"residual_g_perp_zero", "1"},
               {"residual_g_perp_finite", "1"},
               {"flipflop_crossover_radius", "m"}};
  t.add_row({r, B, B_ac, p.J_dip, rb.dphi_single, rb.dphi_cnot, rb.flip_suppression, rb.J_hop, rb.ops_single,
             rb.ops_cnot, e0.infidelity, e1.infidelity, flipflop_crossover_radius(q, r)});
  return t;
}

ResultTable run_symmetry(const RunConfig& c) {
  ResultTable t;
  common_metadata(t, c);
  t.columns = {{"point_group", "text"}, {"crystal_system", "text"}, {"g_perp_zero", "bool"}, {"g_perp_condition", "text"},
               {"electric_dipole", "bool"}, {"inversion", "bool"}, {"annotation", "text"}};
  auto add = [&](const SymmetryRule& r) {
    t.add_row({r.point_group, std::string(to_string(r.system)), std::string(r.allows_g_perp_zero ? "yes" : "no"),
               r.g_perp_condition, std::string(r.allows_electric_dipole ? "yes" : "no"),
               std::string(r.has_inversion ? "yes" : "no"), r.annotation});
  };
  if (!c.group.empty())
    add(symmetry_lookup(c.group));
  else
    for (const auto& r : symmetry_table()) add(r);
  return t;
}

ResultTable run_material(const RunConfig& c) {
  const MaterialRecord m = resolve_material(c.material);
  const IonSpec& s = m.ion;
  ResultTable t;
  common_metadata(t, c);
  t.metadata.push_back({"source", m.source});
  std::string assumed;
  for (const auto& a : m.assumed) assumed += (assumed.empty() ? "" : ", ") + a;
  t.metadata.push_back({"assumed", assumed});
  t.columns = {{"name", "text"},  {"point_group", "text"}, {"J_ground", "1"},   {"J_excited", "1"},
               {"I", "1"},        {"A_J_ground", "Hz"},    {"A_J_excited", "Hz"}, {"g_N", "1"},
               {"delta_J", "Hz"}, {"delta_CF", "Hz"},      {"mu_e_transition", "C*m"}, {"T2_excited", "s"},
               {"minimum_field", "T"}};
  t.add_row({m.name, m.point_group, s.J_ground, s.J_excited, s.I, s.A_J_ground, s.A_J_excited, s.g_N, s.delta_J,
             s.delta_CF, s.mu_e_transition, s.T2_excited, minimum_field(s, 1.0)});
  return t;
}

std::optional<double>* override_slot(RunConfig& c, const std::string& name) {
  if (name == "r") return &c.r;
  if (name == "B") return &c.B;
  if (name == "B_ac") return &c.B_ac;
  if (name == "theta") return &c.theta;
  if (name == "phi") return &c.phi;
  if (name == "target_error") return &c.target_error;
  if (name == "F_act") return &c.F_act;
  if (name == "F_cnot") return &c.F_cnot;
  if (name == "N") return &c.N;
  return nullptr;
}

std::string override_unit(const std::string& name) {
  if (name == "r") return "m";
  if (name == "B" || name == "B_ac") return "T";
  if (name == "theta" || name == "phi") return "rad";
  return "1";
}

Dimension override_dimension(const std::string& name) {
  if (name == "r") return Dimension::length;
  if (name == "B" || name == "B_ac") return Dimension::magnetic_field;
  if (name == "theta" || name == "phi") return Dimension::angle;
  return Dimension::dimensionless;
}

}  // namespace

const char* to_string(Command c) {
  for (const auto& k : kCommands)
    if (k.c == c) return k.name;
  return "unknown";
}

Command parse_command(const std::string& name) {
  for (const auto& k : kCommands)
    if (name == k.name) return k.c;
  throw InputError("unknown command '" + name + "'");
}

void RunConfig::validate() const {
  auto positive = [](const std::optional<double>& v, const char* name) {
    if (v && !(*v > 0)) throw InputError(std::string(name) + " must be positive");
  };
  positive(r, "r");
  positive(B, "B");
  positive(B_ac, "B_ac");
  positive(N, "N");
  if (target_error && !(*target_error > 0 && *target_error < 1)) throw InputError("target_error must lie in (0, 1)");
  if (F_act && !(*F_act > 0 && *F_act < 1)) throw InputError("F_act must lie in (0, 1)");
  if (F_cnot && !(*F_cnot > 0 && *F_cnot < 1)) throw InputError("F_cnot must lie in (0, 1)");
  if (material.empty()) throw InputError("material must not be empty");
  if (sweep) {
    RunConfig probe = *this;
    if (!override_slot(probe, sweep->parameter)) throw InputError("sweep: unknown parameter '" + sweep->parameter + "'");
    if (sweep->count < 1) throw InputError("sweep: count must be >= 1");
    if (sweep->log_spaced && !(sweep->lo > 0 && sweep->hi > 0)) throw InputError("sweep: log spacing needs positive bounds");
  }
}

RunConfig run_config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("", std::string("malformed config: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("", "config must be an object");
  RunConfig c;
  auto str = [&](const char* key) -> std::string {
    const auto& v = j.at(key);
    if (!v.is_string()) throw ParseError(key, "expected a string");
    return v.get<std::string>();
  };
  auto qty = [&](const nlohmann::json& v, const std::string& key, Dimension d) -> double {
    if (v.is_string()) return parse_quantity(v.get<std::string>(), d, key);
    if (v.is_number()) return v.get<double>();
    throw ParseError(key, "expected a quantity");
  };
  if (!j.contains("command")) throw ParseError("command", "missing field");
  try {
    c.command = parse_command(str("command"));
  } catch (const InputError& e) {
    throw ParseError("command", e.what());
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (k == "command") continue;
    if (k == "material") c.material = str("material");
    else if (k == "grid") c.grid = str("grid");
    else if (k == "group") c.group = str("group");
    else if (k == "out") c.out = str("out");
    else if (k == "model") {
      const std::string m = str("model");
      if (m == "full") c.model = ErrorModel::full;
      else if (m == "first_order" || m == "first-order") c.model = ErrorModel::first_order;
      else throw ParseError("model", "expected full or first_order");
    } else if (k == "format") {
      const std::string f = str("format");
      if (f == "csv") c.format = OutputFormat::csv;
      else if (f == "record") c.format = OutputFormat::record;
      else throw ParseError("format", "expected csv or record");
    } else if (k == "sweep") {
      const auto& s = it.value();
      if (!s.is_object()) throw ParseError("sweep", "expected an object");
      SweepAxis a;
      if (!s.contains("parameter") || !s["parameter"].is_string()) throw ParseError("sweep.parameter", "missing field");
      a.parameter = s["parameter"].get<std::string>();
      RunConfig probe;
      if (!override_slot(probe, a.parameter)) throw ParseError("sweep.parameter", "unknown parameter '" + a.parameter + "'");
      for (const char* key : {"lo", "hi", "count"})
        if (!s.contains(key)) throw ParseError(std::string("sweep.") + key, "missing field");
      a.lo = qty(s["lo"], "sweep.lo", override_dimension(a.parameter));
      a.hi = qty(s["hi"], "sweep.hi", override_dimension(a.parameter));
      if (!s["count"].is_number_integer()) throw ParseError("sweep.count", "expected an integer");
      a.count = s["count"].get<int>();
      if (s.contains("log")) a.log_spaced = s["log"].get<bool>();
      c.sweep = a;
    } else if (auto* slot = override_slot(c, k)) {
      *slot = qty(it.value(), k, override_dimension(k));
    } else {
      throw ParseError(k, "unknown key");
    }
  }
  c.validate();
  return c;
}

ResultTable run(const RunConfig& c) {
  c.validate();
  switch (c.command) {
    case Command::speedup_curve: return run_speedup(c);
    case Command::pi_pulse: return run_pi_pulse(c);
    case Command::cnot_report: return run_cnot(c, false);
    case Command::optimize_angles: return run_cnot(c, true);
    case Command::stark_budget: return run_stark(c);
    case Command::robustness: return run_robustness(c);
    case Command::symmetry: return run_symmetry(c);
    case Command::material_dump: return run_material(c);
  }
  throw InputError("unhandled command");
}

ResultTable sweep(const RunConfig& config, const SweepAxis& axis) {
  RunConfig c = config;
  c.sweep.reset();
  if (!override_slot(c, axis.parameter)) throw InputError("sweep: unknown parameter '" + axis.parameter + "'");
  if (axis.count < 1) throw InputError("sweep: count must be >= 1");
  ResultTable out;
  for (int k = 0; k < axis.count; ++k) {
    const double f = axis.count == 1 ? 0.0 : static_cast<double>(k) / (axis.count - 1);
    const double v = axis.log_spaced ? axis.lo * std::pow(axis.hi / axis.lo, f) : axis.lo + (axis.hi - axis.lo) * f;
    *override_slot(c, axis.parameter) = v;
    ResultTable t = run(c);
    if (k == 0) {
      out.metadata = t.metadata;
      out.metadata.push_back({"sweep", axis.parameter + " " + num(axis.lo) + ".." + num(axis.hi) + " count " +
                                           std::to_string(axis.count) + (axis.log_spaced ? " log" : " linear")});
      out.columns.push_back({"sweep_" + axis.parameter, override_unit(axis.parameter)});
      out.columns.insert(out.columns.end(), t.columns.begin(), t.columns.end());
    }
    for (auto& row : t.rows) {
      row.insert(row.begin(), Cell(v));
      out.add_row(std::move(row));
    }
  }
  return out;
}

std::string run_to_text(const RunConfig& c) {
  if (c.command == Command::material_dump && c.format == OutputFormat::record && !c.sweep)
    return dump_material_json(resolve_material(c.material));
  const ResultTable t = c.sweep ? sweep(c, *c.sweep) : run(c);
  return c.format == OutputFormat::csv ? t.to_csv() : t.to_record();
}

}  // namespace renq
