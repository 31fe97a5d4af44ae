#include "renq/ion/ion_spec.hpp"

#include <algorithm>
#include <cmath>

#include "renq/core/constants.hpp"
#include "renq/core/errors.hpp"
#include "renq/core/spin.hpp"

namespace renq {

void IonSpec::validate() const {
  for (double j : {J_ground, J_excited, I})
    if (!is_half_integer(j) || j <= 0) throw InputError("ion: J and I must be positive half-integers");
  if (!is_kramers(J_ground) || !is_kramers(J_excited))
    throw ModelError("ion: doublet model requires half-integer J (Kramers ion)");
  if (delta_J < 0 || delta_CF < 0) throw InputError("ion: energy gaps must be non-negative");
  if (!(T2_excited > 0)) throw InputError("ion: T2 must be positive");
  if (mu_e_transition < 0) throw InputError("ion: transition dipole must be non-negative");
  if (!(g_J_ground > 0) || !(g_J_excited > 0)) throw InputError("ion: Lande factors must be positive");
}

FieldSpec::FieldSpec(double b, double th, double ph) : magnitude(b) {
  if (b < 0) throw InputError("field: magnitude must be non-negative");
  const double two_pi = 2 * constants::pi;
  // fold onto the sphere's canonical chart
  Vec3 d(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
  theta = std::acos(std::clamp(d.z(), -1.0, 1.0));
  phi = std::atan2(d.y(), d.x());
  if (phi < 0) phi += two_pi;
  if (phi >= two_pi) phi -= two_pi;
  if (std::abs(std::sin(theta)) < 1e-15) phi = 0;
}

Vec3 FieldSpec::direction() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

DipolePair::DipolePair(IonSpec a, IonSpec b, Vec3 r) : ion1(std::move(a)), ion2(std::move(b)), r12(std::move(r)) {
  if (!(r12.norm() > 0)) throw InputError("dipole pair: separation must be nonzero");
}

QubitEncoding QubitEncoding::standard(EncodingKind kind, double I) {
  QubitEncoding e;
  e.kind = kind;
  e.passive = {LevelRef{0, -I}, LevelRef{0, -I + 1}};
  if (kind == EncodingKind::electro_nuclear)
    e.active = {LevelRef{0, -I}, LevelRef{1, -I + 1}};
  else
    e.active = {LevelRef{0, -I}, LevelRef{1, -I}};
  return e;
}

void QubitEncoding::validate(double I) const {
  auto ok = [I](const LevelRef& r) {
    return (r.branch == 0 || r.branch == 1) && std::abs(r.m) <= I + 1e-12 && is_half_integer(r.m + I);
  };
  for (const auto& r : passive)
    if (!ok(r)) throw InputError("encoding: passive level out of range");
  for (const auto& r : active)
    if (!ok(r)) throw InputError("encoding: active level out of range");
  if (passive[0] == passive[1] || active[0] == active[1]) throw InputError("encoding: qubit levels must be distinct");
  if (!(active[0] == LevelRef{0, -I})) throw InputError("encoding: active |0> must be the lowest excited-doublet level");
  if (active[0].branch == active[1].branch)
    throw InputError("encoding: active levels must lie in opposite Zeeman branches");
  if ((kind == EncodingKind::electronic) != (active[0].m == active[1].m))
    throw InputError("encoding: active levels do not match the encoding kind");
}

}  // namespace renq
