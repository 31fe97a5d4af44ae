#include "renq/materials/symmetry.hpp"

#include <algorithm>
#include <cctype>

#include "renq/core/errors.hpp"

namespace renq {

const char* to_string(CrystalSystem s) {
  switch (s) {
    case CrystalSystem::triclinic: return "triclinic";
    case CrystalSystem::monoclinic: return "monoclinic";
    case CrystalSystem::orthorhombic: return "orthorhombic";
    case CrystalSystem::tetragonal: return "tetragonal";
    case CrystalSystem::trigonal: return "trigonal";
    case CrystalSystem::hexagonal: return "hexagonal";
    case CrystalSystem::cubic: return "cubic";
  }
  return "unknown";
}

namespace {

SymmetryRule row(const char* g, CrystalSystem s, bool dipole, bool inversion, const char* note = "") {
  SymmetryRule r{g, s, false, "", dipole, inversion, note};
  if (s == CrystalSystem::tetragonal) {
    r.allows_g_perp_zero = true;
    r.g_perp_condition = "J = 3/2";
  } else if (s == CrystalSystem::trigonal || s == CrystalSystem::hexagonal) {
    r.allows_g_perp_zero = true;
    r.g_perp_condition = "J > 1/2";
  }
  return r;
}

std::vector<SymmetryRule> build() {
  using C = CrystalSystem;
  const char* cubic_note = "cubic: isotropic g, unsuitable";
  return {
      row("C1", C::triclinic, true, false),
      row("Ci", C::triclinic, false, true, "also written S2"),
      row("C2", C::monoclinic, true, false),
      row("Cs", C::monoclinic, true, false, "also written C1h"),
      row("C2h", C::monoclinic, false, true),
      row("D2", C::orthorhombic, true, false),
      row("C2v", C::orthorhombic, true, false),
      row("D2h", C::orthorhombic, false, true),
      row("C4", C::tetragonal, true, false),
      row("S4", C::tetragonal, true, false),
      row("C4h", C::tetragonal, false, true),
      row("D4", C::tetragonal, true, false),
      row("C4v", C::tetragonal, true, false),
      row("D2d", C::tetragonal, true, false),
      row("D4h", C::tetragonal, false, true),
      row("C3", C::trigonal, true, false),
      row("C3i", C::trigonal, false, true, "also written S6"),
      row("D3", C::trigonal, true, false),
      row("C3v", C::trigonal, true, false),
      row("D3d", C::trigonal, false, true),
      row("C6", C::hexagonal, true, false),
      row("C3h", C::hexagonal, true, false, "only doublets of the E3-bar double-group representation carry a dipole"),
      row("C6h", C::hexagonal, false, true),
      row("D6", C::hexagonal, true, false),
      row("C6v", C::hexagonal, true, false),
      row("D3h", C::hexagonal, false, false, "only doublets of the E3-bar double-group representation carry a dipole"),
      row("D6h", C::hexagonal, false, true),
      row("T", C::cubic, true, false, cubic_note),
      row("Th", C::cubic, false, true, cubic_note),
      row("Td", C::cubic, false, false, "no inversion, yet Kramers doublets carry no electric dipole; cubic: isotropic g"),
      row("O", C::cubic, true, false, cubic_note),
      row("Oh", C::cubic, false, true, cubic_note),
  };
}

std::string normalize(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '_' || c == '{' || c == '}' || std::isspace(static_cast<unsigned char>(c))) continue;
    out += i == 0 || out.empty() ? static_cast<char>(std::toupper(static_cast<unsigned char>(c)))
                                 : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (out == "S2") return "Ci";
  if (out == "S6") return "C3i";
  if (out == "C1h") return "Cs";
  return out;
}

}  // namespace

const std::vector<SymmetryRule>& symmetry_table() {
  static const std::vector<SymmetryRule> table = build();
  return table;
}

SymmetryRule symmetry_lookup(const std::string& point_group) {
  const std::string key = normalize(point_group);
  for (const auto& r : symmetry_table()) {
    std::string k = r.point_group;
    for (std::size_t i = 1; i < k.size(); ++i) k[i] = static_cast<char>(std::tolower(static_cast<unsigned char>(k[i])));
    if (k == key) return r;
  }
  throw InputError("symmetry_lookup: unknown point group '" + point_group + "'");
}

bool allows_g_perp_zero_for(const SymmetryRule& rule, double J) {
  if (!rule.allows_g_perp_zero) return false;
  if (rule.g_perp_condition == "J = 3/2") return J == 1.5;
  if (rule.g_perp_condition == "J > 1/2") return J > 0.5;
  return true;
}

}  // namespace renq
