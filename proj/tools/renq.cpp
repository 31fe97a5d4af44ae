// Command-line front end; talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "renq/renq.h"

namespace {

int fail(int code, const std::string& kind, const std::string& msg) {
  nlohmann::ordered_json j;
  j["error"] = {{"kind", kind}, {"message", msg}};
  std::cerr << j.dump() << "\n";
  return code;
}

// "r=2nm:40nm:20" or "r=1nm:100nm:30:log"
bool parse_sweep(const std::string& spec, nlohmann::ordered_json& out, std::string& why) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) {
    why = "expected parameter=lo:hi:count[:log]";
    return false;
  }
  std::vector<std::string> parts;
  std::stringstream ss(spec.substr(eq + 1));
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() < 3 || parts.size() > 4 || (parts.size() == 4 && parts[3] != "log")) {
    why = "expected parameter=lo:hi:count[:log]";
    return false;
  }
  int count = 0;
  try {
    std::size_t used = 0;
    count = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("count");
  } catch (const std::exception&) {
    why = "sweep count must be an integer";
    return false;
  }
  out = {{"parameter", spec.substr(0, eq)}, {"lo", parts[0]}, {"hi", parts[1]}, {"count", count},
         {"log", parts.size() == 4}};
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rare-earth electro-nuclear qubit gate simulator"};
  app.set_version_flag("--version", std::string("renq ") + renq_version());

  std::string command;
  std::string material, r, B, Bac, target, grid, out, format = "csv", group, model = "full", theta, phi, N, F_act,
                                                          F_cnot, sweep;
  app.add_option("command", command,
                 "speedup-curve | pi-pulse | cnot-report | optimize-angles | stark-budget | robustness | symmetry | "
                 "material-dump")
      ->required();
  app.add_option("--material", material, "builtin name (er-yso-site1) or material file");
  app.add_option("--r", r, "ion separation, e.g. 10nm");
  app.add_option("--B", B, "static field, e.g. 0.26T");
  app.add_option("--Bac", Bac, "drive field amplitude, e.g. 1mT");
  app.add_option("--theta", theta, "field polar angle, e.g. 35deg");
  app.add_option("--phi", phi, "field azimuth, e.g. 132deg");
  app.add_option("--target-error", target, "target 1-F");
  app.add_option("--N", N, "number of spectator qubits");
  app.add_option("--F-act", F_act, "activation fidelity target");
  app.add_option("--F-cnot", F_cnot, "CNOT fidelity target");
  app.add_option("--grid", grid, "error grid lo:hi:decade_step");
  app.add_option("--group", group, "point group symbol");
  app.add_option("--model", model, "pulse error model")->check(CLI::IsMember({"full", "first_order", "first-order"}));
  app.add_option("--sweep", sweep, "parameter=lo:hi:count[:log]");
  app.add_option("--out", out, "output path (default stdout)");
  app.add_option("--format", format, "csv or record")->check(CLI::IsMember({"csv", "record"}));
  CLI11_PARSE(app, argc, argv);

  nlohmann::ordered_json cfg;
  cfg["command"] = command;
  auto put = [&](const char* key, const std::string& v) {
    if (!v.empty()) cfg[key] = v;
  };
  put("material", material);
  put("r", r);
  put("B", B);
  put("B_ac", Bac);
  put("theta", theta);
  put("phi", phi);
  put("target_error", target);
  put("N", N);
  put("F_act", F_act);
  put("F_cnot", F_cnot);
  put("grid", grid);
  put("group", group);
  cfg["model"] = model;
  cfg["format"] = format;
  if (!sweep.empty()) {
    nlohmann::ordered_json s;
    std::string why;
    if (!parse_sweep(sweep, s, why)) return fail(RENQ_ERR_PARSE, "parse", "--sweep: " + why);
    cfg["sweep"] = s;
  }

  char* text = nullptr;
  const renq_status st = renq_run(cfg.dump().c_str(), &text);
  if (st != RENQ_OK) {
    std::cerr << renq_last_error_record() << "\n";
    return static_cast<int>(st);
  }
  std::string result(text);
  renq_string_free(text);
  if (out.empty()) {
    std::cout << result;
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) return fail(RENQ_ERR_INPUT, "input", "cannot write '" + out + "'");
  f << result;
  return f ? 0 : fail(RENQ_ERR_INPUT, "input", "write to '" + out + "' failed");
}
