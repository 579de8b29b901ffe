#pragma once

#include <array>
#include <complex>

#include "qfs/moebius.hpp"

namespace qfs {

/// Right-angled hexagon in hyperbolic 3-space described by its six complex
/// side lengths, sides[n] holding the side numbered n + 1.
template <typename Scalar>
struct Hexagon {
  std::array<Complex<Scalar>, 6> sides;

  Complex<Scalar> side(int n) const { return sides[static_cast<std::size_t>(((n - 1) % 6 + 6) % 6)]; }
};

template <typename Scalar>
struct HexagonResiduals {
  Scalar cosine = 0;
  Scalar sine = 0;
};

namespace detail {

// cosh of the side opposite to the middle one of (near_left, far, near_right):
// cosh s_n = (cosh s_{n+3} - cosh s_{n+1} cosh s_{n-1}) / (sinh s_{n+1} sinh s_{n-1}).
template <typename Scalar>
Complex<Scalar> opposite_cosh(Complex<Scalar> far, Complex<Scalar> left, Complex<Scalar> right) {
  const Complex<Scalar> den = std::sinh(left) * std::sinh(right);
  if (std::abs(den) <= Scalar(1e-24)) throw DegenerateSide("vanishing sinh in the cosine rule");
  return (std::cosh(far) - std::cosh(left) * std::cosh(right)) / den;
}

}  // namespace detail

/// The hexagon with odd sides s1, s3, s5. Even sides come from the cosine
/// rule on the principal arccosh branch; cosh only fixes each of them up to
/// sign, so sides 4 and 6 take the sign that makes the sine-rule ratios agree
/// with the one of side 2, and the triple is then flipped as a whole if
/// needed so that Re(s2 + s4 + s6) >= 0.
template <typename Scalar>
Hexagon<Scalar> solve_hexagon(Complex<Scalar> s1, Complex<Scalar> s3, Complex<Scalar> s5) {
  using C = Complex<Scalar>;
  for (C s : {s1, s3, s5})
    if (std::abs(std::sinh(s)) <= Scalar(1e-12)) throw DegenerateSide("given side has vanishing sinh");

  C s2 = std::acosh(detail::opposite_cosh(s5, s1, s3));
  C s4 = std::acosh(detail::opposite_cosh(s1, s3, s5));
  C s6 = std::acosh(detail::opposite_cosh(s3, s5, s1));
  for (C s : {s2, s4, s6})
    if (std::abs(std::sinh(s)) <= Scalar(1e-12)) throw DegenerateSide("solved side has vanishing sinh");

  const C ref = std::sinh(s5) / std::sinh(s2);
  auto align = [&](C& even, C odd) {
    const C q = std::sinh(odd) / std::sinh(even);
    if (std::abs(q + ref) < std::abs(q - ref)) even = -even;
  };
  align(s4, s1);
  align(s6, s3);

  const C sum = s2 + s4 + s6;
  if (sum.real() < 0 || (sum.real() == 0 && sum.imag() < 0)) {
    s2 = -s2;
    s4 = -s4;
    s6 = -s6;
  }
  auto w = [](C z) { return ComplexLength<Scalar>::wrap(z); };
  return Hexagon<Scalar>{{w(s1), w(s2), w(s3), w(s4), w(s5), w(s6)}};
}

template <typename Scalar>
HexagonResiduals<Scalar> hexagon_residuals(const Hexagon<Scalar>& h) {
  HexagonResiduals<Scalar> r;
  for (int n = 1; n <= 6; ++n) {
    const auto v = std::cosh(h.side(n)) * std::sinh(h.side(n + 1)) * std::sinh(h.side(n - 1)) +
                   std::cosh(h.side(n + 1)) * std::cosh(h.side(n - 1)) - std::cosh(h.side(n + 3));
    r.cosine = std::max(r.cosine, std::abs(v));
  }
  const std::array<Complex<Scalar>, 3> q{std::sinh(h.side(1)) / std::sinh(h.side(4)),
                                         std::sinh(h.side(3)) / std::sinh(h.side(6)),
                                         std::sinh(h.side(5)) / std::sinh(h.side(2))};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) r.sine = std::max(r.sine, std::abs(q[i] - q[j]));
  return r;
}

}  // namespace qfs
