#pragma once

#include <optional>
#include <string>
#include <vector>

#include "renq/ion/ion_spec.hpp"

namespace renq {

struct MaterialRecord {
  std::string name;
  IonSpec ion;
  std::string point_group;  // Schoenflies symbol, e.g. "C1", "D3h"
  std::string site;
  std::string source;
  std::optional<double> stark_coefficient;    // Hz/(V/cm)
  std::optional<double> wavelength;           // m, optical transition
  std::optional<double> oscillator_strength;  // dimensionless
  std::vector<std::string> assumed;           // dotted paths of values that are assumptions, not data
  std::string frame;                          // angle-frame convention for the g-tensors

  void validate() const;
  bool operator==(const MaterialRecord&) const = default;
};

// JSON document; every physical quantity is a string with an explicit unit (see docs/material-format.md).
MaterialRecord load_material_json(const std::string& text);
MaterialRecord load_material_file(const std::string& path);
std::string dump_material_json(const MaterialRecord& record);

std::vector<std::string> builtin_material_names();
// "er-yso-site1"; throws InputError for unknown names
MaterialRecord builtin_material(const std::string& name);
// builtin name or a file path
MaterialRecord resolve_material(const std::string& name_or_path);

// B_min = margin * I * A_J h / mu_B, using the ground-manifold hyperfine constant.
double minimum_field(const IonSpec& ion, double margin = 10.0);

}  // namespace renq
