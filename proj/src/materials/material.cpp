#include "renq/materials/material.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "renq/core/constants.hpp"
#include "renq/core/errors.hpp"
#include "renq/materials/symmetry.hpp"
#include "renq/materials/units.hpp"

namespace renq {

using nlohmann::json;

namespace {

// same document as data/materials/er_yso_site1.json
constexpr const char* kErYsoSite1 = R"json({
  "name": "er-yso-site1",
  "site": "Y site 1, orientation I",
  "point_group": "C1",
  "source": "167Er:Y2SiO5; g-tensors Bottger et al. 2009, hyperfine Guillot-Noel et al. 2006, g_N Stone 2005, oscillator strength Thiel et al. 2011, Stark coefficient of Eu:Y2SiO5",
  "frame": "crystal frame of the tabulated g-tensors; theta from the third axis, phi from the first",
  "stark_coefficient": "35 kHz/(V/cm)",
  "wavelength": "1536.5 nm",
  "oscillator_strength": 1.1e-7,
  "assumed": ["ion.A_J_excited", "ion.delta_CF", "stark_coefficient"],
  "ion": {
    "J_ground": "15/2",
    "J_excited": "13/2",
    "I": "7/2",
    "A_J_ground": "103.6 MHz",
    "A_J_excited": "103.6 MHz",
    "g_ground": [[3.07, -3.12, 3.40], [-3.12, 8.16, -5.76], [3.40, -5.76, 5.79]],
    "g_excited": [[1.95, -2.21, 3.58], [-2.21, 4.23, -5.00], [3.58, -5.00, 7.89]],
    "g_J_ground": 1.2,
    "g_J_excited": 1.0952,
    "g_N": -0.16,
    "delta_J": "195 THz",
    "delta_CF": "39 cm^-1",
    "mu_e_transition": "2.0e-32 C*m",
    "T2_excited": "4.4 ms"
  }
}
)json";

}  // namespace

namespace {

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

double quantity(const json& obj, const std::string& key, Dimension d, const std::string& path) {
  const json& v = require(obj, key, path);
  const std::string p = join(path, key);
  if (v.is_string()) return parse_quantity(v.get<std::string>(), d, p);
  if (v.is_number() && d == Dimension::dimensionless) return v.get<double>();
  if (v.is_number()) throw ParseError(p, std::string("missing unit, expected a ") + to_string(d));
  throw ParseError(p, "expected a quantity string");
}

std::optional<double> optional_quantity(const json& obj, const std::string& key, Dimension d, const std::string& path) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  return quantity(obj, key, d, path);
}

std::string text(const json& obj, const std::string& key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_string()) throw ParseError(join(path, key), "expected a string");
  return v.get<std::string>();
}

GTensor gtensor(const json& obj, const std::string& key, const std::string& path) {
  const json& v = require(obj, key, path);
  const std::string p = join(path, key);
  if (v.is_array()) {
    if (v.size() != 3) throw ParseError(p, "g-matrix must have 3 rows");
    Mat3 g;
    for (int i = 0; i < 3; ++i) {
      if (!v[i].is_array() || v[i].size() != 3) throw ParseError(p, "g-matrix rows must have 3 entries");
      for (int j = 0; j < 3; ++j) {
        if (!v[i][j].is_number()) throw ParseError(p, "g-matrix entries must be numbers");
        g(i, j) = v[i][j].get<double>();
      }
    }
    return GTensor(g);
  }
  if (v.is_object()) {
    const double par = quantity(v, "g_par", Dimension::dimensionless, p);
    const double perp = quantity(v, "g_perp", Dimension::dimensionless, p);
    Vec3 axis = Vec3::UnitZ();
    if (v.contains("axis")) {
      const json& a = v.at("axis");
      if (!a.is_array() || a.size() != 3) throw ParseError(p + ".axis", "expected a 3-vector");
      for (int i = 0; i < 3; ++i) axis(i) = a[i].get<double>();
      if (!(axis.norm() > 0)) throw ParseError(p + ".axis", "axis must be nonzero");
    }
    return GTensor::axial(par, perp, axis);
  }
  throw ParseError(p, "expected a 3x3 array or {g_par, g_perp, axis}");
}

std::string half_integer_text(double j) {
  const long twice = std::lround(2 * j);
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

json gtensor_json(const GTensor& g) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) rows.push_back({g.matrix()(i, 0), g.matrix()(i, 1), g.matrix()(i, 2)});
  return rows;
}

}  // namespace

void MaterialRecord::validate() const {
  if (name.empty()) throw ParseError("name", "must not be empty");
  try {
    ion.validate();
  } catch (const Error& e) {
    throw ParseError("ion", e.what());
  }
  try {
    symmetry_lookup(point_group);
  } catch (const Error& e) {
    throw ParseError("point_group", e.what());
  }
  if (stark_coefficient && !(*stark_coefficient > 0)) throw ParseError("stark_coefficient", "must be positive");
  if (wavelength && !(*wavelength > 0)) throw ParseError("wavelength", "must be positive");
  if (oscillator_strength && !(*oscillator_strength > 0)) throw ParseError("oscillator_strength", "must be positive");
}

MaterialRecord load_material_json(const std::string& doc) {
  json root;
  try {
    root = json::parse(doc);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed document: ") + e.what());
  }
  MaterialRecord m;
  m.name = text(root, "name", "");
  m.point_group = text(root, "point_group", "");
  m.site = root.contains("site") ? text(root, "site", "") : "";
  m.source = text(root, "source", "");
  m.frame = root.contains("frame") ? text(root, "frame", "") : "";
  m.stark_coefficient = optional_quantity(root, "stark_coefficient", Dimension::stark, "");
  m.wavelength = optional_quantity(root, "wavelength", Dimension::length, "");
  m.oscillator_strength = optional_quantity(root, "oscillator_strength", Dimension::dimensionless, "");
  if (root.contains("assumed")) {
    const json& a = root.at("assumed");
    if (!a.is_array()) throw ParseError("assumed", "expected a list of field paths");
    for (const auto& s : a) {
      if (!s.is_string()) throw ParseError("assumed", "entries must be strings");
      m.assumed.push_back(s.get<std::string>());
    }
  }

  const json& ion = require(root, "ion", "");
  const std::string p = "ion";
  IonSpec& s = m.ion;
  s.J_ground = quantity(ion, "J_ground", Dimension::dimensionless, p);
  s.J_excited = quantity(ion, "J_excited", Dimension::dimensionless, p);
  s.I = quantity(ion, "I", Dimension::dimensionless, p);
  s.A_J_ground = quantity(ion, "A_J_ground", Dimension::frequency, p);
  s.A_J_excited = quantity(ion, "A_J_excited", Dimension::frequency, p);
  s.g_ground = gtensor(ion, "g_ground", p);
  s.g_excited = gtensor(ion, "g_excited", p);
  s.g_J_ground = quantity(ion, "g_J_ground", Dimension::dimensionless, p);
  s.g_J_excited = quantity(ion, "g_J_excited", Dimension::dimensionless, p);
  s.g_N = quantity(ion, "g_N", Dimension::dimensionless, p);
  s.delta_J = quantity(ion, "delta_J", Dimension::frequency, p);
  s.delta_CF = quantity(ion, "delta_CF", Dimension::frequency, p);
  s.mu_e_transition = quantity(ion, "mu_e_transition", Dimension::dipole, p);
  s.T2_excited = quantity(ion, "T2_excited", Dimension::time, p);

  if (!(s.T2_excited > 0)) throw ParseError("ion.T2_excited", "must be positive");
  if (!(s.delta_J > 0)) throw ParseError("ion.delta_J", "must be positive");
  if (!(s.delta_CF > 0)) throw ParseError("ion.delta_CF", "must be positive");
  if (s.mu_e_transition < 0) throw ParseError("ion.mu_e_transition", "must be non-negative");
  m.validate();
  return m;
}

MaterialRecord load_material_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("", "cannot open material file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_material_json(ss.str());
}

std::string dump_material_json(const MaterialRecord& m) {
  const IonSpec& s = m.ion;
  json ion = json::object();
  ion["J_ground"] = half_integer_text(s.J_ground);
  ion["J_excited"] = half_integer_text(s.J_excited);
  ion["I"] = half_integer_text(s.I);
  ion["A_J_ground"] = format_quantity(s.A_J_ground, Dimension::frequency);
  ion["A_J_excited"] = format_quantity(s.A_J_excited, Dimension::frequency);
  ion["g_ground"] = gtensor_json(s.g_ground);
  ion["g_excited"] = gtensor_json(s.g_excited);
  ion["g_J_ground"] = s.g_J_ground;
  ion["g_J_excited"] = s.g_J_excited;
  ion["g_N"] = s.g_N;
  ion["delta_J"] = format_quantity(s.delta_J, Dimension::frequency);
  ion["delta_CF"] = format_quantity(s.delta_CF, Dimension::frequency);
  ion["mu_e_transition"] = format_quantity(s.mu_e_transition, Dimension::dipole);
  ion["T2_excited"] = format_quantity(s.T2_excited, Dimension::time);

  json root = json::object();
  root["name"] = m.name;
  root["site"] = m.site;
  root["point_group"] = m.point_group;
  root["source"] = m.source;
  if (!m.frame.empty()) root["frame"] = m.frame;
  if (m.stark_coefficient) root["stark_coefficient"] = format_quantity(*m.stark_coefficient, Dimension::stark);
  if (m.wavelength) root["wavelength"] = format_quantity(*m.wavelength, Dimension::length);
  if (m.oscillator_strength) root["oscillator_strength"] = *m.oscillator_strength;
  root["assumed"] = m.assumed;
  root["ion"] = ion;
  return root.dump(2) + "\n";
}

std::vector<std::string> builtin_material_names() { return {"er-yso-site1"}; }

MaterialRecord builtin_material(const std::string& name) {
  if (name != "er-yso-site1" && name != "Er:YSO site 1")
    throw InputError("builtin_material: unknown material '" + name + "'");
  return load_material_json(kErYsoSite1);
}

MaterialRecord resolve_material(const std::string& name_or_path) {
  for (const auto& n : builtin_material_names())
    if (n == name_or_path) return builtin_material(n);
  if (name_or_path == "Er:YSO site 1") return builtin_material(name_or_path);
  return load_material_file(name_or_path);
}

double minimum_field(const IonSpec& ion, double margin) {
  if (!(margin >= 1)) throw InputError("minimum_field: margin must be >= 1");
  return margin * ion.I * std::abs(ion.A_J_ground) * constants::h / constants::mu_B;
}

}  // namespace renq
