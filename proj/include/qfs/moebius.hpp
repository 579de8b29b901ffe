#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "qfs/errors.hpp"

namespace qfs {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using Matrix2c = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

template <typename Scalar>
using Vector2c = Eigen::Matrix<std::complex<Scalar>, 2, 1>;

/// Largest entry modulus, the norm used for every residual in the library.
template <typename Derived>
auto max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

/// Unit-determinant lift of a Moebius transformation z -> (az + b) / (cz + d).
template <typename Scalar>
class MoebiusMap {
 public:
  using C = Complex<Scalar>;

  MoebiusMap() : m_(Matrix2c<Scalar>::Identity()) {}

  /// Takes `m` as is; the caller guarantees det(m) = 1.
  static MoebiusMap from_unimodular(const Matrix2c<Scalar>& m) {
    MoebiusMap out;
    out.m_ = m;
    return out;
  }

  /// Rescales by the principal square root of det(m). The SL2 sign of the
  /// result follows that branch.
  static MoebiusMap normalized(const Matrix2c<Scalar>& m) {
    const C det = m.determinant();
    if (std::abs(det) == Scalar(0)) throw Error("singular matrix has no Moebius lift");
    MoebiusMap out;
    out.m_ = m / std::sqrt(det);
    return out;
  }

  static MoebiusMap from_entries(C a, C b, C c, C d) {
    Matrix2c<Scalar> m;
    m << a, b, c, d;
    return normalized(m);
  }

  static MoebiusMap identity() { return MoebiusMap(); }

  /// diag(lambda, 1/lambda).
  static MoebiusMap diagonal(C lambda) {
    Matrix2c<Scalar> m;
    m << lambda, C(0), C(0), C(1) / lambda;
    return from_unimodular(m);
  }

  /// Translation along the 0 -> infinity axis by the complex displacement `t`.
  static MoebiusMap axial(C t) { return diagonal(std::exp(t / Scalar(2))); }

  const Matrix2c<Scalar>& matrix() const { return m_; }
  C a() const { return m_(0, 0); }
  C b() const { return m_(0, 1); }
  C c() const { return m_(1, 0); }
  C d() const { return m_(1, 1); }
  C trace() const { return m_.trace(); }
  C det() const { return m_.determinant(); }

  MoebiusMap inverse() const {
    Matrix2c<Scalar> m;
    m << m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0);
    return from_unimodular(m);
  }

  MoebiusMap operator-() const { return from_unimodular(-m_); }

  /// Conjugation by `g`: g * this * g^-1.
  MoebiusMap conjugated_by(const MoebiusMap& g) const {
    return from_unimodular(g.m_ * m_ * g.inverse().m_);
  }

  template <typename Other>
  MoebiusMap<Other> cast() const {
    return MoebiusMap<Other>::from_unimodular(m_.template cast<Complex<Other>>());
  }

 private:
  Matrix2c<Scalar> m_;
};

/// Matrix product renormalized to unit determinant.
template <typename Scalar>
MoebiusMap<Scalar> compose(const MoebiusMap<Scalar>& A, const MoebiusMap<Scalar>& B) {
  Matrix2c<Scalar> m = A.matrix() * B.matrix();
  const Complex<Scalar> det = m.determinant();
  // det is 1 up to roundoff, so the principal root stays on the +1 sheet.
  return MoebiusMap<Scalar>::from_unimodular(m / std::sqrt(det));
}

template <typename Scalar>
MoebiusMap<Scalar> operator*(const MoebiusMap<Scalar>& A, const MoebiusMap<Scalar>& B) {
  return MoebiusMap<Scalar>::from_unimodular(A.matrix() * B.matrix());
}

/// Point of the projective line, stored with max(|z|, |w|) = 1.
template <typename Scalar>
class ProjectivePoint {
 public:
  using C = Complex<Scalar>;

  ProjectivePoint() : v_(C(1), C(0)) {}
  ProjectivePoint(C z, C w) : ProjectivePoint(Vector2c<Scalar>(z, w)) {}
  explicit ProjectivePoint(const Vector2c<Scalar>& v) {
    const Scalar scale = std::max(std::abs(v(0)), std::abs(v(1)));
    if (scale == Scalar(0)) throw Error("projective point (0 : 0)");
    v_ = v / scale;
  }

  static ProjectivePoint finite(C z) { return ProjectivePoint(z, C(1)); }
  static ProjectivePoint infinity() { return ProjectivePoint(C(1), C(0)); }

  const Vector2c<Scalar>& homogeneous() const { return v_; }
  C z() const { return v_(0); }
  C w() const { return v_(1); }
  bool is_infinity(Scalar tol = Scalar(1e-300)) const { return std::abs(v_(1)) <= tol; }
  /// Affine coordinate z / w.
  C value() const { return v_(0) / v_(1); }

 private:
  Vector2c<Scalar> v_;
};

/// Chordal distance |z1 w2 - z2 w1| / (|p1| |p2|), in [0, 1].
template <typename Scalar>
Scalar projective_distance(const ProjectivePoint<Scalar>& p, const ProjectivePoint<Scalar>& q) {
  const auto& u = p.homogeneous();
  const auto& v = q.homogeneous();
  return std::abs(u(0) * v(1) - u(1) * v(0)) / (u.norm() * v.norm());
}

template <typename Scalar>
ProjectivePoint<Scalar> apply(const MoebiusMap<Scalar>& A, const ProjectivePoint<Scalar>& p) {
  return ProjectivePoint<Scalar>(Vector2c<Scalar>(A.matrix() * p.homogeneous()));
}

template <typename Scalar>
class OrientedGeodesic {
 public:
  static constexpr Scalar kMinGap = Scalar(1e-12);

  OrientedGeodesic(ProjectivePoint<Scalar> repelling, ProjectivePoint<Scalar> attracting)
      : repelling_(repelling), attracting_(attracting) {
    if (projective_distance(repelling_, attracting_) <= kMinGap)
      throw DegenerateGeodesic("geodesic endpoints coincide");
  }

  const ProjectivePoint<Scalar>& repelling() const { return repelling_; }
  const ProjectivePoint<Scalar>& attracting() const { return attracting_; }
  OrientedGeodesic reversed() const { return {attracting_, repelling_}; }

 private:
  ProjectivePoint<Scalar> repelling_;
  ProjectivePoint<Scalar> attracting_;
};

template <typename Scalar>
OrientedGeodesic<Scalar> apply(const MoebiusMap<Scalar>& A, const OrientedGeodesic<Scalar>& g) {
  return {apply(A, g.repelling()), apply(A, g.attracting())};
}

/// Complex length, defined modulo 2 pi i; the stored representative has
/// imaginary part in (-pi, pi].
template <typename Scalar>
class ComplexLength {
 public:
  using C = Complex<Scalar>;

  ComplexLength() = default;
  explicit ComplexLength(C value) : value_(wrap(value)) {}

  C value() const { return value_; }
  Scalar real() const { return value_.real(); }
  Scalar imag() const { return value_.imag(); }

  static C wrap(C z) {
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    Scalar im = std::remainder(z.imag(), Scalar(2) * pi);
    if (im <= -pi) im += Scalar(2) * pi;
    return {z.real(), im};
  }

 private:
  C value_{};
};

/// Distance between two complex lengths, measured modulo 2 pi i.
template <typename Scalar>
Scalar length_distance(Complex<Scalar> a, Complex<Scalar> b) {
  return std::abs(ComplexLength<Scalar>::wrap(a - b));
}

enum class MoebiusClass { identity, parabolic, elliptic, loxodromic };

inline const char* to_string(MoebiusClass k) {
  switch (k) {
    case MoebiusClass::identity: return "identity";
    case MoebiusClass::parabolic: return "parabolic";
    case MoebiusClass::elliptic: return "elliptic";
    case MoebiusClass::loxodromic: return "loxodromic";
  }
  return "?";
}

template <typename Scalar>
MoebiusClass classify(const MoebiusMap<Scalar>& A, Scalar tol = Scalar(1e-9)) {
  const Matrix2c<Scalar> I = Matrix2c<Scalar>::Identity();
  if (std::min(max_abs(A.matrix() - I), max_abs(A.matrix() + I)) <= tol)
    return MoebiusClass::identity;
  const Complex<Scalar> t = A.trace();
  if (std::abs(t * t - Scalar(4)) <= tol) return MoebiusClass::parabolic;
  if (std::abs(t.imag()) <= tol && std::abs(t.real()) < Scalar(2)) return MoebiusClass::elliptic;
  return MoebiusClass::loxodromic;
}

/// Solves 2 cosh(phi / 2) = +-tr(A), taking the sign of the trace with
/// Re(tr) >= 0 so both SL2 lifts give the same answer.
template <typename Scalar>
ComplexLength<Scalar> complex_displacement(const MoebiusMap<Scalar>& A) {
  const MoebiusClass k = classify(A);
  if (k == MoebiusClass::identity || k == MoebiusClass::parabolic)
    throw ParabolicOrIdentity(std::string("complex displacement of a ") + to_string(k) + " map");
  Complex<Scalar> t = A.trace();
  if (t.real() < 0 || (t.real() == 0 && t.imag() < 0)) t = -t;
  return ComplexLength<Scalar>(Scalar(2) * std::acosh(t / Scalar(2)));
}

namespace detail {

// Eigenvector of the 2x2 matrix m for eigenvalue lambda, from the better
// conditioned of the two rows of (m - lambda).
template <typename Scalar>
Vector2c<Scalar> eigenvector(const Matrix2c<Scalar>& m, Complex<Scalar> lambda) {
  const Vector2c<Scalar> v1(m(0, 1), lambda - m(0, 0));
  const Vector2c<Scalar> v2(lambda - m(1, 1), m(1, 0));
  return v1.norm() >= v2.norm() ? v1 : v2;
}

// Eigenvalues ordered so that |first| >= |second|.
template <typename Scalar>
std::pair<Complex<Scalar>, Complex<Scalar>> eigenvalues(const Matrix2c<Scalar>& m) {
  const Complex<Scalar> t = m.trace();
  const Complex<Scalar> disc = std::sqrt(t * t - Scalar(4) * m.determinant());
  Complex<Scalar> l1 = (t + disc) / Scalar(2);
  Complex<Scalar> l2 = (t - disc) / Scalar(2);
  if (std::abs(l1) < std::abs(l2)) std::swap(l1, l2);
  return {l1, l2};
}

}  // namespace detail

/// Axis of a loxodromic map, oriented from the repelling to the attracting
/// fixed point.
template <typename Scalar>
OrientedGeodesic<Scalar> fixed_points(const MoebiusMap<Scalar>& A) {
  if (classify(A) != MoebiusClass::loxodromic) throw NotLoxodromic("fixed_points needs a loxodromic map");
  const auto [big, small] = detail::eigenvalues(A.matrix());
  return {ProjectivePoint<Scalar>(detail::eigenvector(A.matrix(), small)),
          ProjectivePoint<Scalar>(detail::eigenvector(A.matrix(), big))};
}

/// Rotation by pi about the geodesic g (trace zero, det one).
template <typename Scalar>
MoebiusMap<Scalar> half_turn(const OrientedGeodesic<Scalar>& g) {
  using C = Complex<Scalar>;
  Matrix2c<Scalar> P;
  P.col(0) = g.attracting().homogeneous();
  P.col(1) = g.repelling().homogeneous();
  const C i(0, 1);
  Matrix2c<Scalar> D = Matrix2c<Scalar>::Zero();
  D(0, 0) = i;
  D(1, 1) = -i;
  return MoebiusMap<Scalar>::normalized(P * D * P.inverse());
}

/// The Moebius map sending 0 -> repelling, infinity -> attracting and
/// 1 -> `through`, where `through` is an endpoint of a geodesic perpendicular
/// to `axis`. Returned up to the SL2 sign of the principal square root.
template <typename Scalar>
MoebiusMap<Scalar> frame_map(const OrientedGeodesic<Scalar>& axis, const ProjectivePoint<Scalar>& through) {
  Matrix2c<Scalar> P;
  P.col(0) = axis.attracting().homogeneous();
  P.col(1) = axis.repelling().homogeneous();
  const Vector2c<Scalar> coef = P.partialPivLu().solve(through.homogeneous());
  Matrix2c<Scalar> F;
  F.col(0) = P.col(0) * coef(0);
  F.col(1) = P.col(1) * coef(1);
  return MoebiusMap<Scalar>::normalized(F);
}

/// Common perpendicular of two geodesics, oriented from g1 toward g2: the axis
/// of the composition of the half-turns about g1 then g2.
template <typename Scalar>
OrientedGeodesic<Scalar> common_perpendicular(const OrientedGeodesic<Scalar>& g1,
                                              const OrientedGeodesic<Scalar>& g2) {
  const MoebiusMap<Scalar> K = half_turn(g2) * half_turn(g1);
  const auto [big, small] = detail::eigenvalues(K.matrix());
  return {ProjectivePoint<Scalar>(detail::eigenvector(K.matrix(), small)),
          ProjectivePoint<Scalar>(detail::eigenvector(K.matrix(), big))};
}

/// Complex distance sigma between oriented geodesics. After a change of
/// coordinates putting the common perpendicular on 0 -> infinity, g1 has
/// endpoints (u, -u), g2 has (p, -p) and e^sigma u = p (u, p the attracting
/// endpoints). Re(sigma) >= 0; for intersecting geodesics Im(sigma) >= 0.
template <typename Scalar>
ComplexLength<Scalar> complex_distance(const OrientedGeodesic<Scalar>& g1, const OrientedGeodesic<Scalar>& g2) {
  using C = Complex<Scalar>;
  constexpr Scalar gap = OrientedGeodesic<Scalar>::kMinGap;
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar rr = projective_distance(g1.repelling(), g2.repelling());
  const Scalar aa = projective_distance(g1.attracting(), g2.attracting());
  const Scalar ra = projective_distance(g1.repelling(), g2.attracting());
  const Scalar ar = projective_distance(g1.attracting(), g2.repelling());
  if (rr <= gap && aa <= gap) return ComplexLength<Scalar>(C(0));
  if (ra <= gap && ar <= gap) return ComplexLength<Scalar>(C(0, pi));
  if (std::min({rr, aa, ra, ar}) <= gap) throw SharedEndpoint("geodesics share an endpoint");

  const OrientedGeodesic<Scalar> perp = common_perpendicular(g1, g2);
  Matrix2c<Scalar> F;
  F.col(0) = perp.attracting().homogeneous();
  F.col(1) = perp.repelling().homogeneous();
  const Matrix2c<Scalar> Finv = F.inverse();
  const Vector2c<Scalar> u = Finv * g1.attracting().homogeneous();
  const Vector2c<Scalar> p = Finv * g2.attracting().homogeneous();
  C sigma = std::log((p(0) * u(1)) / (p(1) * u(0)));
  if (sigma.real() < 0) sigma = -sigma;
  sigma = ComplexLength<Scalar>::wrap(sigma);
  if (std::abs(sigma.real()) <= Scalar(1e-12) && sigma.imag() < 0) sigma = C(sigma.real(), -sigma.imag());
  return ComplexLength<Scalar>(sigma);
}

}  // namespace qfs
