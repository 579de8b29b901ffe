#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "qfs/holonomy.hpp"

namespace qfs {

template <typename Scalar>
using MatrixXc = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using VectorXc = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1>;

/// Orientation of the fundamental class relative to the relator, fixed once
/// by requiring pairing(d/dl_1, d/dtau_1) = +1 at the Fuchsian point
/// l = (2, 2, 2), tau = 0 of the two-pants genus-2 graph.
inline constexpr int kRelatorOrientation = -1;

/// With the trace form tr(XY) the cup product measures (1/2) sum dl^dtau;
/// the Goldman pairing is reported as twice the cup product.
inline constexpr int kWedgeNormalization = 2;

/// Lie-algebra values u(x) of a crossed homomorphism on the generators of
/// `base`, extended to words by u(xy) = u(x) + Ad_x u(y).
template <typename Scalar>
struct TangentCocycle {
  Representation<Scalar> base;
  std::vector<Matrix2c<Scalar>> values;  // values[k - 1] is u of letter k
};

template <typename Scalar>
Matrix2c<Scalar> adjoint(const MoebiusMap<Scalar>& g, const Matrix2c<Scalar>& X) {
  return g.matrix() * X * g.inverse().matrix();
}

template <typename Scalar>
Matrix2c<Scalar> trace_free(const Matrix2c<Scalar>& X) {
  return X - (X.trace() / Scalar(2)) * Matrix2c<Scalar>::Identity();
}

namespace detail {

// Walks the word w over (images, values), returning u(w) and rho(w).
template <typename Scalar>
std::pair<Matrix2c<Scalar>, Matrix2c<Scalar>> walk(const std::vector<MoebiusMap<Scalar>>& images,
                                                   const std::vector<Matrix2c<Scalar>>& values, const Word& w) {
  Matrix2c<Scalar> U = Matrix2c<Scalar>::Zero();
  MoebiusMap<Scalar> M;
  for (int x : w) {
    const auto k = static_cast<std::size_t>(std::abs(x) - 1);
    if (x == 0 || k >= images.size()) throw UnknownGenerator("letter " + std::to_string(x) + " is not a generator");
    const MoebiusMap<Scalar> g = x > 0 ? images[k] : images[k].inverse();
    const Matrix2c<Scalar> ux = x > 0 ? values[k] : Matrix2c<Scalar>(-adjoint(g, values[k]));
    U += adjoint(M, ux);
    M = M * g;
  }
  return {U, M.matrix()};
}

}  // namespace detail

template <typename Scalar>
Matrix2c<Scalar> evaluate_cocycle(const TangentCocycle<Scalar>& u, const Word& w) {
  return detail::walk(u.base.images, u.values, w).first;
}

/// First-order variation of tr rho(w) along u: tr(u(w) rho(w)).
template <typename Scalar>
Complex<Scalar> trace_variation(const TangentCocycle<Scalar>& u, const Word& w) {
  const auto [U, M] = detail::walk(u.base.images, u.values, w);
  return (U * M).trace();
}

template <typename Scalar>
Scalar cocycle_residual(const TangentCocycle<Scalar>& u) {
  return max_abs(evaluate_cocycle(u, u.base.presentation->relator));
}

template <typename Scalar>
TangentCocycle<Scalar> coboundary(const Matrix2c<Scalar>& w, const Representation<Scalar>& rep) {
  TangentCocycle<Scalar> u{rep, {}};
  for (const auto& g : rep.images) u.values.push_back(adjoint(g, w) - w);
  return u;
}

template <typename Scalar>
TangentCocycle<Scalar> operator+(const TangentCocycle<Scalar>& u, const TangentCocycle<Scalar>& v) {
  TangentCocycle<Scalar> out = u;
  for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] += v.values.at(k);
  return out;
}

template <typename Scalar>
TangentCocycle<Scalar> operator*(Complex<Scalar> a, const TangentCocycle<Scalar>& u) {
  TangentCocycle<Scalar> out = u;
  for (auto& X : out.values) X *= a;
  return out;
}

template <typename Scalar>
void require_same_base(const Representation<Scalar>& a, const Representation<Scalar>& b) {
  if (a.presentation != b.presentation || a.images.size() != b.images.size())
    throw BaseMismatch("cocycles live on different presentations");
  for (std::size_t k = 0; k < a.images.size(); ++k) {
    const Scalar scale = std::max(Scalar(1), max_abs(a.images[k].matrix()));
    if (max_abs(a.images[k].matrix() - b.images[k].matrix()) > Scalar(1e-12) * scale)
      throw BaseMismatch("cocycles are based at different representations");
  }
}

/// Cup product of u and v paired by tr(XY) on the fundamental class of the
/// one-relator presentation, with the fixed relator orientation but without
/// the wedge normalization. Beyond the prefix sum over r = y_1 ... y_m this
/// includes sum_x tr(u(x) v(x)), the term the Fox-calculus 2-cycle picks up
/// from inverse letters: together they are sum over the cells [p|x] with
/// coefficients the Fox derivatives of r.
template <typename Scalar>
Complex<Scalar> cup_product(const TangentCocycle<Scalar>& u, const TangentCocycle<Scalar>& v) {
  require_same_base(u.base, v.base);
  const auto& images = u.base.images;
  Complex<Scalar> s = 0;
  Matrix2c<Scalar> U = Matrix2c<Scalar>::Zero();
  MoebiusMap<Scalar> M;
  for (int x : u.base.presentation->relator) {
    const auto k = static_cast<std::size_t>(std::abs(x) - 1);
    const MoebiusMap<Scalar> g = x > 0 ? images[k] : images[k].inverse();
    const Matrix2c<Scalar> ux = x > 0 ? u.values[k] : Matrix2c<Scalar>(-adjoint(g, u.values[k]));
    const Matrix2c<Scalar> vx = x > 0 ? v.values[k] : Matrix2c<Scalar>(-adjoint(g, v.values[k]));
    s += (U * adjoint(M, vx)).trace();
    U += adjoint(M, ux);
    M = M * g;
  }
  for (std::size_t k = 0; k < images.size(); ++k) s += (u.values[k] * v.values[k]).trace();
  return Scalar(kRelatorOrientation) * s;
}

template <typename Scalar>
Complex<Scalar> goldman_pairing(const TangentCocycle<Scalar>& u, const TangentCocycle<Scalar>& v) {
  return Scalar(kWedgeNormalization) * cup_product(u, v);
}

/// Central-difference tangent cocycle in the FN direction `direction`
/// (ordering l_1..l_N, tau_1..tau_N). Differences are taken on the edge
/// holonomies of the cell complex, each matched to the same SL2 lift as the
/// base point, and carried to the standard generators by the cocycle rule,
/// which keeps the long generator products out of the difference quotient.
template <typename Scalar>
TangentCocycle<Scalar> fd_tangent_cocycle(std::shared_ptr<const SurfaceGroupPresentation> pres,
                                          const FNCoordinates<Scalar>& fn, const VectorXc<Scalar>& direction, Scalar h,
                                          const std::optional<MoebiusMap<Scalar>>& gauge = std::nullopt) {
  const int N = fn.size();
  if (direction.size() != 2 * N) throw DegenerateFN("direction has the wrong dimension");
  auto shifted = [&](Scalar t) {
    FNCoordinates<Scalar> f = fn;
    for (int k = 0; k < 2 * N; ++k) f[k] += t * direction(k);
    return f;
  };
  const auto H0 = edge_holonomies(*pres, fn);
  const auto Hp = edge_holonomies(*pres, shifted(h));
  const auto Hm = edge_holonomies(*pres, shifted(-h));

  std::vector<Matrix2c<Scalar>> edge_u;
  for (std::size_t e = 0; e < H0.size(); ++e) {
    const Matrix2c<Scalar>& m0 = H0[e].matrix();
    auto aligned = [&](const Matrix2c<Scalar>& m) -> Matrix2c<Scalar> {
      const Scalar same = max_abs(m - m0), opposite = max_abs(m + m0);
      const Scalar worst = std::min(same, opposite);
      if (worst > Scalar(0.25) * std::max(Scalar(1), max_abs(m0)))
        throw BranchFailure("edge holonomy jumps across the stencil");
      return opposite < same ? Matrix2c<Scalar>(-m) : m;
    };
    const Matrix2c<Scalar> d = (aligned(Hp[e].matrix()) - aligned(Hm[e].matrix())) / (Scalar(2) * h);
    edge_u.push_back(trace_free(Matrix2c<Scalar>(d * H0[e].inverse().matrix())));
  }

  // Raw generators are edge paths; the crossed-homomorphism rule applies to
  // the groupoid of paths verbatim.
  const auto& cx = pres->complex;
  std::vector<Matrix2c<Scalar>> raw_u;
  for (int e : pres->raw_edges) {
    const auto& ed = cx.edges[static_cast<std::size_t>(e - 1)];
    const Word path = concat(concat(cx.tree_path[static_cast<std::size_t>(ed.src)], Word{e}),
                             inverse(cx.tree_path[static_cast<std::size_t>(ed.dst)]));
    raw_u.push_back(detail::walk(H0, edge_u, path).first);
  }
  const auto raw = raw_generator_images(*pres, H0);
  TangentCocycle<Scalar> u{assemble(pres, H0, gauge), {}};
  for (const Word& w : pres->generator_in_raw) {
    Matrix2c<Scalar> X = detail::walk(raw, raw_u, w).first;
    if (gauge) X = adjoint(*gauge, X);
    u.values.push_back(X);
  }
  return u;
}

template <typename Scalar>
VectorXc<Scalar> basis_direction(int dimension, int k) {
  VectorXc<Scalar> e = VectorXc<Scalar>::Zero(dimension);
  e(k) = Complex<Scalar>(1);
  return e;
}

/// Canonical form [[0, I], [-I, 0]] in the (l, tau) ordering.
template <typename Scalar>
MatrixXc<Scalar> canonical_symplectic(int N) {
  MatrixXc<Scalar> J = MatrixXc<Scalar>::Zero(2 * N, 2 * N);
  for (int i = 0; i < N; ++i) {
    J(i, N + i) = Complex<Scalar>(1);
    J(N + i, i) = Complex<Scalar>(-1);
  }
  return J;
}

template <typename Scalar>
struct SymplecticGram {
  MatrixXc<Scalar> matrix;            // antisymmetrized Goldman pairings
  Scalar raw_asymmetry = 0;           // max |G + G^T| before antisymmetrizing
  Complex<Scalar> cup_scale = 0;      // mean of cup_product(d/dl_i, d/dtau_i)
  Scalar max_cocycle_residual = 0;
};

template <typename Scalar>
SymplecticGram<Scalar> symplectic_gram(std::shared_ptr<const SurfaceGroupPresentation> pres,
                                       const FNCoordinates<Scalar>& fn, Scalar h,
                                       const std::optional<MoebiusMap<Scalar>>& gauge = std::nullopt) {
  const int N = fn.size();
  std::vector<TangentCocycle<Scalar>> us;
  SymplecticGram<Scalar> out;
  for (int k = 0; k < 2 * N; ++k) {
    us.push_back(fd_tangent_cocycle(pres, fn, basis_direction<Scalar>(2 * N, k), h, gauge));
    out.max_cocycle_residual = std::max(out.max_cocycle_residual, cocycle_residual(us.back()));
  }
  MatrixXc<Scalar> G(2 * N, 2 * N);
  for (int a = 0; a < 2 * N; ++a)
    for (int b = 0; b < 2 * N; ++b) G(a, b) = goldman_pairing(us[a], us[b]);
  out.raw_asymmetry = (G + G.transpose()).cwiseAbs().maxCoeff();
  out.matrix = (G - G.transpose()) / Scalar(2);
  for (int i = 0; i < N; ++i) out.cup_scale += cup_product(us[i], us[N + i]) / Scalar(N);
  return out;
}

template <typename Scalar>
Scalar darboux_residual(const SymplecticGram<Scalar>& g) {
  const auto N = static_cast<int>(g.matrix.rows() / 2);
  return (g.matrix - canonical_symplectic<Scalar>(N)).cwiseAbs().maxCoeff();
}

}  // namespace qfs
