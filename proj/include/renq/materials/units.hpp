#pragma once

#include <string>
#include <string_view>

namespace renq {

enum class Dimension {
  dimensionless,
  frequency,    // Hz (energies are stored as E/h)
  time,         // s
  length,       // m
  magnetic_field,  // T
  dipole,       // C m
  stark,        // Hz/(V/cm)
  angle,        // rad
  electric_field,  // V/cm
};

const char* to_string(Dimension d);
// SI unit written on export, e.g. "Hz", "C*m"
const char* canonical_unit(Dimension d);

// "<number> <unit>" -> SI value. Dimensioned quantities require a unit; dimensionless ones
// reject any. Fractions such as "15/2" are accepted for dimensionless values.
// Throws ParseError with `path` on failure.
double parse_quantity(std::string_view text, Dimension expected, const std::string& path = "");

// Inverse of parse_quantity in canonical units, round-trip exact ("%.17g Hz").
std::string format_quantity(double value, Dimension d);

}  // namespace renq
