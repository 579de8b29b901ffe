#include <doctest.h>

#include "support.hpp"

using namespace qfs;
using namespace qfs::test;

namespace {

const C e1 = std::exp(C(1));

MoebiusMap<S> diag(C x) { return MoebiusMap<S>::diagonal(x); }

}  // namespace

TEST_CASE("compose and inverse") {
  std::mt19937_64 rng(1);
  const auto A = random_moebius(rng);
  const auto B = random_moebius(rng);
  CHECK(max_abs((compose(MoebiusMap<S>::identity(), A)).matrix() - A.matrix()) < 1e-15);
  CHECK(max_abs(compose(A, A.inverse()).matrix() - Matrix2c<S>::Identity()) < 1e-15);
  CHECK(max_abs(compose(diag(e1), diag(e1)).matrix() - diag(e1 * e1).matrix()) < 1e-15);
  for (int t = 0; t < 50; ++t) {
    const auto X = random_moebius(rng), Y = random_moebius(rng), Z = random_moebius(rng);
    CHECK(std::abs(compose(X, Y).det() - S(1)) < 1e-12);
    CHECK(max_abs(compose(compose(X, Y), Z).matrix() - compose(X, compose(Y, Z)).matrix()) < 1e-12);
  }
  CHECK(std::abs(compose(A, B).det() - S(1)) < 1e-15);
}

TEST_CASE("classify") {
  Matrix2c<S> p;
  p << C(1), C(1), C(0), C(1);
  CHECK(classify(MoebiusMap<S>::identity()) == MoebiusClass::identity);
  CHECK(classify(-MoebiusMap<S>::identity()) == MoebiusClass::identity);
  CHECK(classify(MoebiusMap<S>::from_unimodular(p)) == MoebiusClass::parabolic);
  CHECK(classify(diag(e1)) == MoebiusClass::loxodromic);
  CHECK(classify(diag(std::exp(C(0, 0.7)))) == MoebiusClass::elliptic);
}

TEST_CASE("complex displacement") {
  CHECK(std::abs(complex_displacement(diag(e1)).value() - C(2)) < 1e-15);
  CHECK(std::abs(complex_displacement(diag(std::exp(C(0.5, 0.5)))).value() - C(1, 1)) < 1e-15);
  // Both SL2 lifts give the same answer.
  CHECK(std::abs(complex_displacement(-diag(std::exp(C(0.5, 0.5)))).value() - C(1, 1)) < 1e-15);

  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const auto M = random_moebius(rng);
    const auto A = diag(e1).conjugated_by(M);
    const C phi = complex_displacement(A).value();
    CHECK(std::abs(phi - C(2)) < 1e-10);
    // Brute force: log of the ratio of the eigenvalues.
    Eigen::ComplexEigenSolver<Matrix2c<S>> es(A.matrix());
    const C ratio = es.eigenvalues()(0) / es.eigenvalues()(1);
    CHECK(std::abs(std::abs(std::log(ratio).real()) - phi.real()) < 1e-10);

    const auto B = random_moebius(rng);
    if (classify(B) == MoebiusClass::loxodromic) {
      const C pb = complex_displacement(B).value();
      CHECK(std::abs(complex_displacement(B.conjugated_by(M)).value() - pb) < 1e-10);
      CHECK(pb.real() >= 0);
      CHECK(pb.imag() > -std::numbers::pi_v<S>);
      CHECK(pb.imag() <= std::numbers::pi_v<S>);
    }
  }
  Matrix2c<S> p;
  p << C(1), C(1), C(0), C(1);
  CHECK_THROWS_AS(complex_displacement(MoebiusMap<S>::from_unimodular(p)), ParabolicOrIdentity);
  CHECK_THROWS_AS(complex_displacement(MoebiusMap<S>::identity()), ParabolicOrIdentity);
}

TEST_CASE("fixed points") {
  const auto g = fixed_points(diag(e1));
  CHECK(projective_distance(g.attracting(), ProjectivePoint<S>::infinity()) < 1e-15);
  CHECK(projective_distance(g.repelling(), ProjectivePoint<S>::finite(0)) < 1e-15);

  Matrix2c<S> w;
  w << C(0), C(1), C(-1), C(0);
  const auto W = MoebiusMap<S>::from_unimodular(w);
  const auto h = fixed_points(diag(e1).conjugated_by(W));
  CHECK(projective_distance(h.attracting(), g.repelling()) < 1e-15);
  CHECK(projective_distance(h.repelling(), g.attracting()) < 1e-15);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto A = random_moebius(rng);
    if (classify(A) != MoebiusClass::loxodromic) continue;
    const auto ax = fixed_points(A);
    CHECK(projective_distance(apply(A, ax.attracting()), ax.attracting()) < 1e-10);
    CHECK(projective_distance(apply(A, ax.repelling()), ax.repelling()) < 1e-10);
    const auto M = random_moebius(rng);
    const auto moved = fixed_points(A.conjugated_by(M));
    CHECK(projective_distance(moved.attracting(), apply(M, ax.attracting())) < 1e-10);
    CHECK(projective_distance(moved.repelling(), apply(M, ax.repelling())) < 1e-10);
  }
  CHECK_THROWS_AS(fixed_points(MoebiusMap<S>::identity()), NotLoxodromic);
}

TEST_CASE("apply") {
  const auto p = ProjectivePoint<S>::finite(C(0.3, 0.2));
  CHECK(projective_distance(apply(MoebiusMap<S>::identity(), p), p) < 1e-18);
  Matrix2c<S> par;
  par << C(1), C(1), C(0), C(1);
  CHECK(projective_distance(apply(MoebiusMap<S>::from_unimodular(par), ProjectivePoint<S>::infinity()),
                            ProjectivePoint<S>::infinity()) < 1e-18);
  CHECK(std::abs(apply(diag(e1), ProjectivePoint<S>::finite(1)).value() - e1 * e1) < 1e-15);
  // Stored scaled to max(|z|, |w|) = 1.
  const ProjectivePoint<S> big(C(1e300), C(1));
  CHECK(std::abs(big.z()) == doctest::Approx(1.0));
}

TEST_CASE("complex distance") {
  using P = ProjectivePoint<S>;
  auto geo = [](C a) { return OrientedGeodesic<S>(P::finite(-a), P::finite(a)); };
  CHECK(std::abs(complex_distance(geo(1), geo(C(0, 1))).value() - C(0, std::numbers::pi_v<S> / 2)) < 1e-15);
  CHECK(std::abs(complex_distance(geo(1), geo(1)).value()) < 1e-15);
  CHECK(std::abs(complex_distance(geo(1), geo(1).reversed()).value() - C(0, std::numbers::pi_v<S>)) < 1e-15);
  for (S t : {0.1L, 0.5L, 2.0L}) {
    const C sigma = complex_distance(geo(1), geo(std::exp(C(t)))).value();
    CHECK(std::abs(sigma - C(t)) < 1e-12);
    // Cross-ratio oracle: for lines (-1, 1) and (-x, x), cosh d = (1 + x^2) / (2x).
    const S x = std::exp(t);
    CHECK(std::abs(std::cosh(sigma.real()) - (1 + x * x) / (2 * x)) < 1e-12);
  }
  CHECK_THROWS_AS(complex_distance(geo(1), OrientedGeodesic<S>(P::finite(1), P::finite(5))), SharedEndpoint);
  CHECK_THROWS_AS(OrientedGeodesic<S>(P::finite(1), P::finite(1)), DegenerateGeodesic);

  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const auto A = random_moebius(rng), B = random_moebius(rng);
    if (classify(A) != MoebiusClass::loxodromic || classify(B) != MoebiusClass::loxodromic) continue;
    const auto g1 = fixed_points(A), g2 = fixed_points(B);
    const C s12 = complex_distance(g1, g2).value();
    const C s21 = complex_distance(g2, g1).value();
    CHECK(std::abs(s12.real() - s21.real()) < 1e-10);
    // Isometry invariance.
    const auto M = random_moebius(rng);
    CHECK(length_distance(complex_distance(apply(M, g1), apply(M, g2)).value(), s12) < 1e-9);
  }
}
