#pragma once

#include <string>
#include <vector>

namespace renq {

enum class CrystalSystem { triclinic, monoclinic, orthorhombic, tetragonal, trigonal, hexagonal, cubic };
const char* to_string(CrystalSystem s);

// Kramers-doublet admissibility of one crystallographic point group.
struct SymmetryRule {
  std::string point_group;
  CrystalSystem system;
  bool allows_g_perp_zero;
  std::string g_perp_condition;  // "J = 3/2", "J > 1/2" or empty
  bool allows_electric_dipole;   // every Kramers doublet carries an electric dipole
  bool has_inversion;
  std::string annotation;
};

// Accepts Schoenflies symbols with optional underscores and either case for subscripts
// ("C3h", "C_3h", "C_{3h}"); "Cs" and "C1h" are the same group. InputError for unknown symbols.
SymmetryRule symmetry_lookup(const std::string& point_group);
const std::vector<SymmetryRule>& symmetry_table();

// g_perp = 0 doublets possible for a given J under this rule
bool allows_g_perp_zero_for(const SymmetryRule& rule, double J);

}  // namespace renq
