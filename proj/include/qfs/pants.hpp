#pragma once

#include <array>

#include "qfs/moebius.hpp"

namespace qfs {

/// Half-lengths of the three cuffs of a pair of pants: the cuff traces are
/// -2 cosh(sigma_i).
template <typename Scalar>
struct PantsBoundaryData {
  std::array<Complex<Scalar>, 3> sigma;
};

/// Cuff holonomies C1 C2 C3 = I together with their axes.
template <typename Scalar>
struct PantsRepresentation {
  std::array<MoebiusMap<Scalar>, 3> cuffs;
  std::array<OrientedGeodesic<Scalar>, 3> axes;
};

/// Normal form
///   C1 = [[t1, -1], [1, 0]],  C2 = [[0, z], [-1/z, t2]],  C3 = (C1 C2)^-1
/// with t_i = -2 cosh(sigma_i) and z = -e^(sigma_3), so tr(C1 C2) = z + 1/z.
/// All entries are real when the sigma_i are. Axes are written down directly
/// from the eigenvectors rather than recomputed.
template <typename Scalar>
PantsRepresentation<Scalar> pants_representation(const PantsBoundaryData<Scalar>& d) {
  using C = Complex<Scalar>;
  for (const C& s : d.sigma) {
    if (!(s.real() > 0)) throw DegenerateFN("cuff length must have positive real part");
    if (std::abs(std::sinh(s)) < Scalar(1e-12)) throw DegenerateFN("cuff length too close to zero");
  }
  const C t1 = Scalar(-2) * std::cosh(d.sigma[0]);
  const C t2 = Scalar(-2) * std::cosh(d.sigma[1]);
  const C t3 = Scalar(-2) * std::cosh(d.sigma[2]);
  const C commutator = t1 * t1 + t2 * t2 + t3 * t3 - t1 * t2 * t3 - Scalar(2);
  if (std::abs(commutator - Scalar(2)) <= Scalar(1e-10))
    throw ReduciblePants("boundary traces give a reducible representation");

  const C z = -std::exp(d.sigma[2]);
  Matrix2c<Scalar> m1, m2;
  m1 << t1, C(-1), C(1), C(0);
  m2 << C(0), z, -C(1) / z, t2;
  const auto c1 = MoebiusMap<Scalar>::from_unimodular(m1);
  const auto c2 = MoebiusMap<Scalar>::from_unimodular(m2);
  const auto c3 = (c1 * c2).inverse();

  using P = ProjectivePoint<Scalar>;
  const C e1 = std::exp(d.sigma[0]);
  const C e2 = std::exp(d.sigma[1]);
  PantsRepresentation<Scalar> out{
      {c1, c2, c3},
      {OrientedGeodesic<Scalar>(P(-C(1) / e1, C(1)), P(-e1, C(1))),
       OrientedGeodesic<Scalar>(P(z, -C(1) / e2), P(z, -e2)),
       OrientedGeodesic<Scalar>(P(t1 * z - t2, z - C(1) / z), P(C(1), C(0)))}};
  return out;
}

/// max_i |tr(C_i) + 2 cosh(sigma_i)| and ||C1 C2 C3 - I||_max.
template <typename Scalar>
std::pair<Scalar, Scalar> pants_residuals(const PantsBoundaryData<Scalar>& d, const PantsRepresentation<Scalar>& p) {
  Scalar tr = 0;
  for (int i = 0; i < 3; ++i)
    tr = std::max(tr, std::abs(p.cuffs[i].trace() + Scalar(2) * std::cosh(d.sigma[i])));
  const Matrix2c<Scalar> prod = (p.cuffs[0] * p.cuffs[1] * p.cuffs[2]).matrix();
  return {tr, max_abs(prod - Matrix2c<Scalar>::Identity())};
}

}  // namespace qfs
