#pragma once

// Central elements z0..z5 of the generic Clifford algebra, the formal
// discriminant, and normal-form checks of centrality and of the relation
// z4^2 = z5^3 - 27 Delta.

#include "gcliff/rewrite.hpp"

#include <array>
#include <string>
#include <vector>

namespace gcliff {

template <Field K>
struct CenterElements {
  NcPoly<K> z0, z1, z2, z3, z4, z5;
  /// (yx)^2 - x^2y^2, which must agree with z5 modulo the relations.
  NcPoly<K> z5_alternate;

  std::array<const NcPoly<K>*, 6> all() const { return {&z0, &z1, &z2, &z3, &z4, &z5}; }
};

/// z4 = (yx - w xy)^3 - (3/2) w (1 - w) x^3 y^3 - (9/2)(1 + 2 w^2) z1 z2.
/// `z1z2_coefficient` overrides the last constant; the default (nullopt) uses
/// -(9/2)(1 + 2 w^2).
template <Field K>
CenterElements<K> central_elements(const K& k,
                                   std::optional<typename K::value_type> z1z2_coefficient = std::nullopt) {
  auto w = [&](std::string_view s) { return NcPoly<K>::word(k, s); };
  auto omega = k.cube_root_unity();
  auto third = k.from_ratio(1, 3);
  auto omega2 = k.mul(omega, omega);

  CenterElements<K> z{w("xxx"), (w("xxy") + w("xyx") + w("yxx")).scaled(third),
                      (w("yyx") + w("yxy") + w("xyy")).scaled(third), w("yyy"),
                      NcPoly<K>(k), w("xyxy") - w("yyxx"), w("yxyx") - w("xxyy")};

  auto twisted = w("yx") - w("xy").scaled(omega);
  // (3/2) w (1 - w)
  auto c_xy = k.mul(k.from_ratio(3, 2), k.mul(omega, k.sub(k.one(), omega)));
  auto c_z1z2 = z1z2_coefficient ? *z1z2_coefficient
                                 : k.neg(k.mul(k.from_ratio(9, 2), k.add(k.one(), k.mul(k.from_int(2), omega2))));
  z.z4 = twisted.pow(3) - w("xxxyyy").scaled(c_xy) + (z.z1 * z.z2).scaled(c_z1z2);
  return z;
}

/// Delta = 1/4 (z0 z3 - z1 z2)^2 - (z0 z2 - z1^2)(z1 z3 - z2^2), expanded in the free algebra.
template <Field K>
NcPoly<K> formal_discriminant_nc(const K& k) {
  auto z = central_elements(k);
  auto m03 = z.z0 * z.z3 - z.z1 * z.z2;
  auto m02 = z.z0 * z.z2 - z.z1 * z.z1;
  auto m13 = z.z1 * z.z3 - z.z2 * z.z2;
  return (m03 * m03).scaled(k.from_ratio(1, 4)) - m02 * m13;
}

template <Field K>
void check_confluent_degree(const RewriteSystem<K>& system, int degree) {
  if (!system.is_complete() && degree > static_cast<int>(system.confluent_to()))
    throw DegreeOutOfRange("needs normal forms in degree " + std::to_string(degree) + ", system is confluent to " +
                           std::to_string(system.confluent_to()));
}

/// Normal forms of [p, x] and [p, y].
template <Field K>
std::pair<NcPoly<K>, NcPoly<K>> centrality_residuals(const RewriteSystem<K>& system, const NcPoly<K>& p) {
  const K& k = system.field();
  check_confluent_degree(system, p.degree() + 1);
  NormalFormCache<K> nf(system);
  return {nf(commutator(p, NcPoly<K>::x(k))), nf(commutator(p, NcPoly<K>::y(k)))};
}

template <Field K>
bool verify_centrality(const RewriteSystem<K>& system, const NcPoly<K>& p) {
  auto [rx, ry] = centrality_residuals(system, p);
  return rx.is_zero() && ry.is_zero();
}

/// Normal form of z4^2 - z5^3 + 27 Delta; zero iff the center relation holds.
template <Field K>
NcPoly<K> center_relation_residual(const RewriteSystem<K>& system) {
  const K& k = system.field();
  check_confluent_degree(system, 12);
  auto z = central_elements(k);
  auto rel = z.z4 * z.z4 - z.z5.pow(3) + formal_discriminant_nc(k).scaled(k.from_int(27));
  NormalFormCache<K> nf(system);
  return nf(rel);
}

template <Field K>
bool verify_center_relation(const RewriteSystem<K>& system) {
  return center_relation_residual(system).is_zero();
}

/// All c in F_p for which z4 with z1 z2 coefficient c satisfies the center
/// relation. The residual is A + c B + c^2 C with fixed normal forms A, B, C
/// (z1 z2 is central, so centrality alone cannot pin c down).
inline std::vector<Residue> solve_z1z2_coefficient(const RewriteSystem<PrimeField>& system) {
  const PrimeField& k = system.field();
  check_confluent_degree(system, 12);
  auto base = central_elements(k, k.zero());
  auto prod = base.z1 * base.z2;
  NormalFormCache<PrimeField> nf(system);
  auto a = nf(base.z4 * base.z4 - base.z5.pow(3) + formal_discriminant_nc(k).scaled(k.from_int(27)));
  auto b = nf(base.z4 * prod + prod * base.z4);
  auto c = nf(prod * prod);
  std::vector<Residue> roots;
  for (std::uint64_t v = 0; v < k.modulus(); ++v) {
    Residue t{v};
    if ((a + b.scaled(t) + c.scaled(k.mul(t, t))).is_zero()) roots.push_back(t);
  }
  return roots;
}

}  // namespace gcliff
