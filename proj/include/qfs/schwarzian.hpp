#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

#include "qfs/errors.hpp"

namespace qfs {

/// A holomorphic function on a disk. `derivative[k]` (k = 0, 1, 2) may hold
/// the exact (k+1)-th derivative; missing ones are computed numerically.
template <typename Scalar>
struct HolomorphicSample {
  using C = std::complex<Scalar>;
  using Fn = std::function<C(C)>;

  Fn f;
  std::array<Fn, 3> derivative;
  C center{};
  Scalar radius = 1;

  bool analytic() const { return derivative[0] && derivative[1] && derivative[2]; }
};

/// The n-th derivative (n = 1, 2, 3) from f on a circle of radius h:
/// f^(n)(z0) ~ n! / (K h^n) sum_k f(z0 + h w^k) w^(-nk), w = e^(2 pi i / K).
/// With K = 8 points the aliasing error is O(h^(8 - n)).
template <typename Scalar>
std::complex<Scalar> contour_derivative(const std::function<std::complex<Scalar>(std::complex<Scalar>)>& f,
                                        std::complex<Scalar> z0, int n, Scalar h) {
  constexpr int K = 8;
  using C = std::complex<Scalar>;
  C sum = 0;
  for (int k = 0; k < K; ++k) {
    const Scalar angle = Scalar(2) * std::numbers::pi_v<Scalar> * Scalar(k) / Scalar(K);
    sum += f(z0 + h * std::polar(Scalar(1), angle)) * std::polar(Scalar(1), -Scalar(n) * angle);
  }
  Scalar factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= Scalar(i);
  return sum * factorial / (Scalar(K) * std::pow(h, n));
}

/// f', f'', f''' at z0, exact where available.
template <typename Scalar>
std::array<std::complex<Scalar>, 3> derivatives(const HolomorphicSample<Scalar>& s, std::complex<Scalar> z0) {
  std::array<std::complex<Scalar>, 3> d;
  const Scalar h = Scalar(1e-3) * s.radius;
  for (int k = 0; k < 3; ++k) d[k] = s.derivative[k] ? s.derivative[k](z0) : contour_derivative(s.f, z0, k + 1, h);
  return d;
}

template <typename Scalar>
std::complex<Scalar> schwarzian_at(const HolomorphicSample<Scalar>& s, std::complex<Scalar> z0) {
  const auto [d1, d2, d3] = derivatives(s, z0);
  if (std::abs(d1) <= Scalar(1e-10)) throw CriticalPoint("f' vanishes at the base point");
  const auto r = d2 / d1;
  return d3 / d1 - Scalar(1.5) * r * r;
}

/// g o f. Derivatives follow from the chain rule when both factors carry
/// exact ones; otherwise the composite is differentiated numerically.
template <typename Scalar>
HolomorphicSample<Scalar> compose(const HolomorphicSample<Scalar>& g, const HolomorphicSample<Scalar>& f) {
  HolomorphicSample<Scalar> out;
  out.center = f.center;
  out.radius = f.radius;
  out.f = [g, f](auto z) { return g.f(f.f(z)); };
  if (f.analytic() && g.analytic()) {
    out.derivative[0] = [g, f](auto z) { return g.derivative[0](f.f(z)) * f.derivative[0](z); };
    out.derivative[1] = [g, f](auto z) {
      const auto w = f.f(z), f1 = f.derivative[0](z);
      return g.derivative[1](w) * f1 * f1 + g.derivative[0](w) * f.derivative[1](z);
    };
    out.derivative[2] = [g, f](auto z) {
      const auto w = f.f(z), f1 = f.derivative[0](z), f2 = f.derivative[1](z);
      return g.derivative[2](w) * f1 * f1 * f1 + Scalar(3) * g.derivative[1](w) * f1 * f2 +
             g.derivative[0](w) * f.derivative[2](z);
    };
  }
  return out;
}

/// |S(g o f)(z0) - Sf(z0) - Sg(f(z0)) f'(z0)^2|.
template <typename Scalar>
Scalar cocycle_check(const HolomorphicSample<Scalar>& f, const HolomorphicSample<Scalar>& g, std::complex<Scalar> z0) {
  const auto gf = compose(g, f);
  const auto f1 = derivatives(f, z0)[0];
  return std::abs(schwarzian_at(gf, z0) - schwarzian_at(f, z0) - schwarzian_at(g, f.f(z0)) * f1 * f1);
}

/// Samples with exact derivatives for the function families used in tests.
template <typename Scalar>
HolomorphicSample<Scalar> moebius_sample(std::complex<Scalar> a, std::complex<Scalar> b, std::complex<Scalar> c,
                                         std::complex<Scalar> d, bool exact = true) {
  using C = std::complex<Scalar>;
  HolomorphicSample<Scalar> s;
  s.f = [=](C z) { return (a * z + b) / (c * z + d); };
  if (exact) {
    const C det = a * d - b * c;
    s.derivative[0] = [=](C z) { return det / ((c * z + d) * (c * z + d)); };
    s.derivative[1] = [=](C z) { return Scalar(-2) * c * det / std::pow(c * z + d, 3); };
    s.derivative[2] = [=](C z) { return Scalar(6) * c * c * det / std::pow(c * z + d, 4); };
  }
  return s;
}

template <typename Scalar>
HolomorphicSample<Scalar> exp_sample(bool exact = true) {
  using C = std::complex<Scalar>;
  HolomorphicSample<Scalar> s;
  s.f = [](C z) { return std::exp(z); };
  if (exact) s.derivative = {s.f, s.f, s.f};
  return s;
}

/// c0 + c1 z + c2 z^2 + c3 z^3.
template <typename Scalar>
HolomorphicSample<Scalar> cubic_sample(std::array<std::complex<Scalar>, 4> c, bool exact = true) {
  using C = std::complex<Scalar>;
  HolomorphicSample<Scalar> s;
  s.f = [c](C z) { return c[0] + z * (c[1] + z * (c[2] + z * c[3])); };
  if (exact) {
    s.derivative[0] = [c](C z) { return c[1] + z * (Scalar(2) * c[2] + Scalar(3) * z * c[3]); };
    s.derivative[1] = [c](C z) { return Scalar(2) * c[2] + Scalar(6) * z * c[3]; };
    s.derivative[2] = [c](C) { return Scalar(6) * c[3]; };
  }
  return s;
}

}  // namespace qfs
