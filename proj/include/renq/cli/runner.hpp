#pragma once

#include <optional>
#include <string>

#include "renq/cli/result_table.hpp"
#include "renq/pulse/pi_pulse_optimizer.hpp"

namespace renq {

enum class Command {
  speedup_curve,
  pi_pulse,
  cnot_report,
  optimize_angles,
  stark_budget,
  robustness,
  symmetry,
  material_dump,
};
const char* to_string(Command c);
Command parse_command(const std::string& name);  // InputError for unknown names

enum class OutputFormat { csv, record };

struct SweepAxis {
  std::string parameter;  // one of the numeric overrides: r, B, B_ac, theta, phi, target_error, F_act, F_cnot, N
  double lo = 0;          // SI
  double hi = 0;
  int count = 1;
  bool log_spaced = false;
};

struct RunConfig {
  Command command = Command::cnot_report;
  std::string material = "er-yso-site1";  // builtin name or path
  std::optional<double> r;             // m
  std::optional<double> B;             // T
  std::optional<double> B_ac;          // T
  std::optional<double> theta, phi;    // rad
  std::optional<double> target_error;
  std::optional<double> F_act, F_cnot;
  std::optional<double> N;
  std::string grid;                    // speedup-curve: "lo:hi:decades", e.g. "1e-8:1e-2:0.25"
  std::string group;                   // symmetry
  ErrorModel model = ErrorModel::full;
  std::optional<SweepAxis> sweep;
  std::string out;                     // empty: stdout
  OutputFormat format = OutputFormat::csv;

  // throws InputError naming the offending field
  void validate() const;
};

// JSON form used by the C API: {"command": "cnot-report", "r": "10 nm", ...}; quantities are
// unit strings or SI numbers. ParseError carries the offending key.
RunConfig run_config_from_json(const std::string& text);

ResultTable run(const RunConfig& config);
ResultTable sweep(const RunConfig& config, const SweepAxis& axis);

// run (or sweep when config.sweep is set) and render in the configured format;
// material-dump in record format yields the reloadable material document
std::string run_to_text(const RunConfig& config);

}  // namespace renq
