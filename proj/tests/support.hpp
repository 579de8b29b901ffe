#pragma once

#include <array>
#include <memory>
#include <random>
#include <string>

#include "qfs/cocycle.hpp"
#include "qfs/config.hpp"
#include "qfs/limit_set.hpp"

namespace qfs::test {

using S = long double;
using C = std::complex<S>;

inline std::string config_path(const std::string& name) { return std::string(QFS_CONFIG_DIR) + "/" + name; }
inline std::string fixture_path(const std::string& name) { return std::string(QFS_FIXTURE_DIR) + "/" + name; }

/// Two pants glued cuff to cuff.
inline PantsDecompositionGraph theta_graph() {
  return {2, 2, {{"a1", {{{0, 0}, {1, 0}}}}, {"a2", {{{0, 1}, {1, 1}}}}, {"a3", {{{0, 2}, {1, 2}}}}}};
}

/// Two one-holed tori joined along a separating curve (label "s").
inline PantsDecompositionGraph dumbbell_graph() {
  return {2, 2, {{"h1", {{{0, 0}, {0, 1}}}}, {"s", {{{0, 2}, {1, 0}}}}, {"h2", {{{1, 1}, {1, 2}}}}}};
}

/// Four pants on the complete graph K4.
inline PantsDecompositionGraph genus3_graph() {
  return {3,
          4,
          {{"c1", {{{0, 0}, {1, 0}}}},
           {"c2", {{{0, 1}, {2, 0}}}},
           {"c3", {{{0, 2}, {3, 0}}}},
           {"c4", {{{1, 1}, {2, 1}}}},
           {"c5", {{{2, 2}, {3, 1}}}},
           {"c6", {{{3, 2}, {1, 2}}}}}};
}

inline std::shared_ptr<const SurfaceGroupPresentation> present(const PantsDecompositionGraph& g) {
  return std::make_shared<const SurfaceGroupPresentation>(build_presentation(g));
}

inline FNCoordinates<S> make_fn(std::initializer_list<C> l, std::initializer_list<C> tau) {
  return {std::vector<C>(l), std::vector<C>(tau)};
}

/// Uniform draw from Re(l) in [1, 4], |Im l| <= im_l, |Re tau| <= 1, |Im tau| <= im_tau.
inline FNCoordinates<S> random_fn(std::mt19937_64& rng, int N, double im_l = 0.3, double im_tau = 0.3) {
  std::uniform_real_distribution<double> u(-1.0, 1.0), len(1.0, 4.0);
  FNCoordinates<S> fn;
  for (int k = 0; k < N; ++k) {
    fn.l.emplace_back(len(rng), im_l * u(rng));
    fn.tau.emplace_back(u(rng), im_tau * u(rng));
  }
  return fn;
}

inline Matrix2c<S> random_matrix(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  Matrix2c<S> m;
  m << C(n(rng), n(rng)), C(n(rng), n(rng)), C(n(rng), n(rng)), C(n(rng), n(rng));
  return m;
}

inline MoebiusMap<S> random_moebius(std::mt19937_64& rng, double scale = 1.0) {
  for (;;) {
    const Matrix2c<S> m = random_matrix(rng, scale);
    if (std::abs(m.determinant()) > 0.1) return MoebiusMap<S>::normalized(m);
  }
}

inline Matrix2c<S> random_sl2_algebra(std::mt19937_64& rng, double scale = 1.0) {
  return trace_free(random_matrix(rng, scale));
}

/// Error allowance for pairing identities of FD cocycles:
/// 10 (residual(u) + residual(v)) (1 + |u|)(1 + |v|), |u| the largest
/// generator value.
inline S pairing_bound(const TangentCocycle<S>& u, const TangentCocycle<S>& v) {
  auto size = [](const TangentCocycle<S>& w) {
    S m = 0;
    for (const auto& X : w.values) m = std::max(m, max_abs(X));
    return m;
  };
  return 10 * (cocycle_residual(u) + cocycle_residual(v)) * (1 + size(u)) * (1 + size(v));
}

/// Largest |Im| of the cross-ratio of three well separated cloud points with
/// every other point, relative to the size of the cross-ratio. Zero when the
/// cloud lies on one circle.
inline double circle_defect(const LimitSetCloud& cloud) {
  const auto& p = cloud.points;
  if (p.size() < 4) return 0;
  // a, b: the farthest pair among the first points; c: the farthest from both.
  std::size_t ia = 0, ib = 1, ic = 2;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (std::abs(p[i] - p[0]) > std::abs(p[ib] - p[0])) ib = i;
  ia = 0;
  double best = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = std::min(std::abs(p[i] - p[ia]), std::abs(p[i] - p[ib]));
    if (d > best) best = d, ic = i;
  }
  double worst = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i == ia || i == ib || i == ic) continue;
    const auto cr = cross_ratio(p[ia], p[ib], p[ic], p[i]);
    worst = std::max(worst, std::abs(cr.imag()) / std::max(1.0, std::abs(cr)));
  }
  return worst;
}

/// Even sides of the planar right-angled hexagon with odd sides a, b, c,
/// found by closing up the frame walk "advance by side, turn left by a right
/// angle" six times in the upper half-plane. Newton iteration on the three
/// unknown sides, continued from the regular hexagon a = b = c = 2; no
/// hyperbolic trigonometry is used.
inline std::array<S, 3> hexagon_oracle(S a, S b, S c) {
  using M = Eigen::Matrix<S, 2, 2>;
  using V = Eigen::Matrix<S, 3, 1>;
  const S r = std::sqrt(S(0.5));
  M turn;
  turn << r, -r, r, r;
  auto walk = [&](const std::array<S, 3>& odd, const std::array<S, 3>& even) {
    const std::array<S, 6> side{odd[0], even[0], odd[1], even[1], odd[2], even[2]};
    M g = M::Identity();
    for (S s : side) {
      M t;
      t << std::exp(s / 2), 0, 0, std::exp(-s / 2);
      g = g * t * turn;
    }
    if (g.trace() < 0) g = -g;
    return V(g(0, 1), g(1, 0), g(0, 0) - g(1, 1));
  };
  auto newton = [&](const std::array<S, 3>& odd, std::array<S, 3> x) {
    for (int it = 0; it < 50; ++it) {
      const V f = walk(odd, x);
      if (f.norm() < 1e-17) break;
      Eigen::Matrix<S, 3, 3> J;
      for (int j = 0; j < 3; ++j) {
        auto xp = x, xm = x;
        xp[j] += 1e-7;
        xm[j] -= 1e-7;
        J.col(j) = (walk(odd, xp) - walk(odd, xm)) / S(2e-7);
      }
      const V dx = J.fullPivLu().solve(f);
      for (int j = 0; j < 3; ++j) x[j] -= dx(j);
    }
    return x;
  };
  std::array<S, 3> x{1, 1, 1};
  const int steps = 32;
  for (int k = 0; k <= steps; ++k) {
    const S t = S(k) / steps;
    x = newton({2 + t * (a - 2), 2 + t * (b - 2), 2 + t * (c - 2)}, x);
  }
  return x;
}

}  // namespace qfs::test
