#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "renq/cli/result_table.hpp"
#include "renq/cli/runner.hpp"
#include "renq/core/constants.hpp"
#include "renq/core/errors.hpp"
#include "renq/materials/material.hpp"

using namespace renq;
using nlohmann::json;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string parse_error_path(const std::string& doc) {
  try {
    run_config_from_json(doc);
  } catch (const ParseError& e) {
    return e.path();
  }
  return "<no error>";
}

RunConfig cnot_at(double r) {
  RunConfig c;
  c.command = Command::cnot_report;
  c.r = r;
  c.theta = 35 * constants::pi / 180;
  c.phi = 132 * constants::pi / 180;
  return c;
}

}  // namespace

TEST(ResultTable, CsvHasNameAndUnitRows) {
  ResultTable t;
  t.metadata = {{"command", "demo"}, {"seed", "none"}};
  t.columns = {{"r", "m"}, {"label", "text"}};
  t.add_row({1e-8, std::string("a")});
  t.add_row({0.5, std::string("b")});
  auto l = lines(t.to_csv());
  ASSERT_EQ(l.size(), 6u);
  EXPECT_EQ(l[0], "# command: demo");
  EXPECT_EQ(l[2], "r,label");
  EXPECT_EQ(l[3], "m,text");
  EXPECT_EQ(l[4], "1e-08,a");
  EXPECT_EQ(t.number(1, "r"), 0.5);
  EXPECT_THROW(t.add_row({1.0}), InputError);
  EXPECT_THROW(t.column("missing"), InputError);
}

TEST(ResultTable, RecordUsesNullForNonFinite) {
  ResultTable t;
  t.metadata = {{"command", "demo"}};
  t.columns = {{"x", "1"}, {"y", "1"}};
  t.add_row({std::numeric_limits<double>::infinity(), 0.1});
  auto j = json::parse(t.to_record());
  EXPECT_TRUE(j["rows"][0][0].is_null());
  EXPECT_DOUBLE_EQ(j["rows"][0][1].get<double>(), 0.1);
  EXPECT_EQ(j["columns"][1]["name"], "y");
  EXPECT_EQ(j["metadata"]["command"], "demo");
  EXPECT_EQ(format_number(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(std::stod(format_number(0.1)), 0.1);
}

TEST(Runner, SymmetryRow) {
  RunConfig c;
  c.command = Command::symmetry;
  c.group = "C4";
  auto t = run(c);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(std::get<std::string>(t.rows[0][t.column("g_perp_condition")]), "J = 3/2");
  c.group.clear();
  EXPECT_EQ(run(c).rows.size(), 32u);
  c.group = "X9";
  EXPECT_THROW(run(c), InputError);
}

TEST(Runner, SingleValueSweepEqualsRun) {
  RunConfig c = cnot_at(10e-9);
  SweepAxis a{"r", 10e-9, 10e-9, 1, false};
  auto s = sweep(c, a);
  auto one = run(c);
  ASSERT_EQ(s.rows.size(), 1u);
  EXPECT_EQ(s.columns.size(), one.columns.size() + 1);
  EXPECT_EQ(s.number(0, "sweep_r"), 10e-9);
  for (const char* col : {"F_min", "total_time", "J_dip", "asymmetry"}) EXPECT_EQ(s.number(0, col), one.number(0, col));
}

TEST(Runner, ReversedSweepReversesRows) {
  RunConfig c = cnot_at(10e-9);
  auto up = sweep(c, {"r", 6e-9, 14e-9, 5, false});
  auto down = sweep(c, {"r", 14e-9, 6e-9, 5, false});
  ASSERT_EQ(up.rows.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_NEAR(up.number(i, "r"), down.number(4 - i, "r"), 1e-22);
    EXPECT_NEAR(up.number(i, "F_min"), down.number(4 - i, "F_min"), 1e-12);
  }
  auto logs = sweep(c, {"r", 5e-9, 20e-9, 3, true});
  EXPECT_NEAR(logs.number(1, "r"), 10e-9, 1e-20);
  EXPECT_THROW(sweep(c, {"colour", 0, 1, 2, false}), InputError);
  EXPECT_THROW(sweep(c, {"r", 5e-9, 20e-9, 0, false}), InputError);
}

TEST(Runner, OutputIsDeterministic) {
  RunConfig c;
  c.command = Command::pi_pulse;
  c.model = ErrorModel::first_order;
  c.target_error = 1e-4;
  const std::string a = run_to_text(c);
  EXPECT_EQ(a, run_to_text(c));
  c.format = OutputFormat::record;
  const std::string b = run_to_text(c);
  EXPECT_EQ(b, run_to_text(c));
  EXPECT_NO_THROW(json::parse(b));
}

TEST(Runner, MaterialDumpRecordReloads) {
  RunConfig c;
  c.command = Command::material_dump;
  c.format = OutputFormat::record;
  EXPECT_EQ(load_material_json(run_to_text(c)), builtin_material("er-yso-site1"));
}

TEST(ConfigJson, QuantitiesWithUnits) {
  auto c = run_config_from_json(R"({"command": "cnot-report", "r": "12 nm", "B": "0.3 T", "theta": "35 deg",
                                    "phi": "132 deg", "format": "record"})");
  EXPECT_EQ(c.command, Command::cnot_report);
  EXPECT_DOUBLE_EQ(*c.r, 12e-9);
  EXPECT_DOUBLE_EQ(*c.B, 0.3);
  EXPECT_NEAR(*c.theta, 35 * constants::pi / 180, 1e-15);
  EXPECT_EQ(c.format, OutputFormat::record);
  auto s = run_config_from_json(R"({"command": "cnot-report", "sweep": {"parameter": "r", "lo": "5 nm",
                                    "hi": "20 nm", "count": 4, "log": true}})");
  ASSERT_TRUE(s.sweep.has_value());
  EXPECT_DOUBLE_EQ(s.sweep->hi, 20e-9);
  EXPECT_TRUE(s.sweep->log_spaced);
}

TEST(ConfigJson, ErrorsNameTheKey) {
  EXPECT_EQ(parse_error_path(R"({"r": "10 nm"})"), "command");
  EXPECT_EQ(parse_error_path(R"({"command": "teleport"})"), "command");
  EXPECT_EQ(parse_error_path(R"({"command": "cnot-report", "r": "10 parsecs"})"), "r");
  EXPECT_EQ(parse_error_path(R"({"command": "cnot-report", "B": "3 nm"})"), "B");
  EXPECT_EQ(parse_error_path(R"({"command": "cnot-report", "colour": "red"})"), "colour");
  EXPECT_EQ(parse_error_path(R"({"command": "cnot-report", "model": "exactish"})"), "model");
  EXPECT_EQ(parse_error_path(R"({"command": "cnot-report", "sweep": {"parameter": "r", "lo": "1 nm"}})"),
            "sweep.hi");
  EXPECT_EQ(parse_error_path(R"({"command": "cnot-report", "sweep": {"parameter": "q", "lo": 1, "hi": 2,
                                 "count": 2}})"),
            "sweep.parameter");
  EXPECT_EQ(parse_error_path(R"({"command": "pi-pulse", "target_error": 1e-4})"), "<no error>");
}

TEST(ConfigJson, ValidationRejectsOutOfRange) {
  EXPECT_THROW(run_config_from_json(R"({"command": "cnot-report", "r": "-1 nm"})"), Error);
  EXPECT_THROW(run_config_from_json(R"({"command": "pi-pulse", "target_error": 2})"), Error);
}
