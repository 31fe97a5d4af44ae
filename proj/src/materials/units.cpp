#include "renq/materials/units.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "renq/core/constants.hpp"
#include "renq/core/errors.hpp"

namespace renq {

namespace {

struct UnitDef {
  std::string_view symbol;
  Dimension dim;
  double scale;  // SI per unit
};

constexpr double kCm1 = 100.0 * 299792458.0;  // wavenumber -> Hz

constexpr std::array<UnitDef, 38> kUnits{{
    {"Hz", Dimension::frequency, 1.0},
    {"kHz", Dimension::frequency, 1e3},
    {"MHz", Dimension::frequency, 1e6},
    {"GHz", Dimension::frequency, 1e9},
    {"THz", Dimension::frequency, 1e12},
    {"cm^-1", Dimension::frequency, kCm1},
    {"s", Dimension::time, 1.0},
    {"ms", Dimension::time, 1e-3},
    {"us", Dimension::time, 1e-6},
    {"µs", Dimension::time, 1e-6},
    {"μs", Dimension::time, 1e-6},
    {"ns", Dimension::time, 1e-9},
    {"ps", Dimension::time, 1e-12},
    {"m", Dimension::length, 1.0},
    {"cm", Dimension::length, 1e-2},
    {"mm", Dimension::length, 1e-3},
    {"um", Dimension::length, 1e-6},
    {"µm", Dimension::length, 1e-6},
    {"nm", Dimension::length, 1e-9},
    {"pm", Dimension::length, 1e-12},
    {"A", Dimension::length, 1e-10},
    {"T", Dimension::magnetic_field, 1.0},
    {"mT", Dimension::magnetic_field, 1e-3},
    {"uT", Dimension::magnetic_field, 1e-6},
    {"µT", Dimension::magnetic_field, 1e-6},
    {"G", Dimension::magnetic_field, 1e-4},
    {"C*m", Dimension::dipole, 1.0},
    {"D", Dimension::dipole, 3.33564095198152e-30},
    {"Hz/(V/cm)", Dimension::stark, 1.0},
    {"kHz/(V/cm)", Dimension::stark, 1e3},
    {"MHz/(V/cm)", Dimension::stark, 1e6},
    {"rad", Dimension::angle, 1.0},
    {"deg", Dimension::angle, constants::pi / 180},
    {"V/cm", Dimension::electric_field, 1.0},
    {"V/m", Dimension::electric_field, 1e-2},
    {"kV/cm", Dimension::electric_field, 1e3},
    {"1", Dimension::dimensionless, 1.0},
    {"", Dimension::dimensionless, 1.0},
}};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_number(std::string_view s, double& out) {
  const char* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && p == end && std::isfinite(out);
}

}  // namespace

const char* to_string(Dimension d) {
  switch (d) {
    case Dimension::dimensionless: return "dimensionless";
    case Dimension::frequency: return "frequency";
    case Dimension::time: return "time";
    case Dimension::length: return "length";
    case Dimension::magnetic_field: return "magnetic field";
    case Dimension::dipole: return "dipole moment";
    case Dimension::stark: return "Stark coefficient";
    case Dimension::angle: return "angle";
    case Dimension::electric_field: return "electric field";
  }
  return "unknown";
}

const char* canonical_unit(Dimension d) {
  switch (d) {
    case Dimension::dimensionless: return "1";
    case Dimension::frequency: return "Hz";
    case Dimension::time: return "s";
    case Dimension::length: return "m";
    case Dimension::magnetic_field: return "T";
    case Dimension::dipole: return "C*m";
    case Dimension::stark: return "Hz/(V/cm)";
    case Dimension::angle: return "rad";
    case Dimension::electric_field: return "V/cm";
  }
  return "";
}

double parse_quantity(std::string_view text, Dimension expected, const std::string& path) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError(path, "empty quantity");
  // number ends at the first space, or where a unit letter starts right after digits ("10nm")
  std::size_t split = s.find(' ');
  if (split == std::string_view::npos) {
    split = 0;
    while (split < s.size()) {
      char c = s[split];
      bool numeric = std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+' || c == '/' ||
                     ((c == 'e' || c == 'E') && split + 1 < s.size() &&
                      (std::isdigit(static_cast<unsigned char>(s[split + 1])) || s[split + 1] == '-' || s[split + 1] == '+'));
      if (!numeric) break;
      ++split;
    }
  }
  std::string_view num = trim(s.substr(0, split));
  std::string_view unit = trim(s.substr(split));

  double value = 0;
  if (auto slash = num.find('/'); slash != std::string_view::npos) {
    double a = 0, b = 0;
    if (!parse_number(num.substr(0, slash), a) || !parse_number(num.substr(slash + 1), b) || b == 0)
      throw ParseError(path, "malformed fraction '" + std::string(num) + "'");
    value = a / b;
  } else if (!parse_number(num, value)) {
    throw ParseError(path, "malformed number in '" + std::string(s) + "'");
  }

  for (const auto& u : kUnits) {
    if (u.symbol != unit) continue;
    if (u.dim != expected) {
      if (unit.empty()) throw ParseError(path, std::string("missing unit, expected a ") + to_string(expected));
      throw ParseError(path, "unit '" + std::string(unit) + "' is a " + to_string(u.dim) + ", expected a " +
                                 to_string(expected));
    }
    return value * u.scale;
  }
  throw ParseError(path, "unknown unit '" + std::string(unit) + "'");
}

std::string format_quantity(double v, Dimension d) {
  char buf[64];
  if (d == Dimension::dimensionless)
    std::snprintf(buf, sizeof buf, "%.17g", v);
  else
    std::snprintf(buf, sizeof buf, "%.17g %s", v, canonical_unit(d));
  return buf;
}

}  // namespace renq
