#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "qfs/moebius.hpp"
#include "qfs/pants.hpp"
#include "qfs/presentation.hpp"

namespace qfs {

/// Complex lengths and twists, indexed like the graph's gluings.
template <typename Scalar>
struct FNCoordinates {
  std::vector<Complex<Scalar>> l;
  std::vector<Complex<Scalar>> tau;

  int size() const { return static_cast<int>(l.size()); }

  /// Coordinate k of the ordering (l_1, ..., l_N, tau_1, ..., tau_N).
  Complex<Scalar>& operator[](int k) { return k < size() ? l[k] : tau[k - size()]; }
  Complex<Scalar> operator[](int k) const { return k < size() ? l[k] : tau[k - size()]; }

  template <typename Other>
  FNCoordinates<Other> cast() const {
    FNCoordinates<Other> out;
    for (auto z : l) out.l.emplace_back(static_cast<Other>(z.real()), static_cast<Other>(z.imag()));
    for (auto z : tau) out.tau.emplace_back(static_cast<Other>(z.real()), static_cast<Other>(z.imag()));
    return out;
  }
};

template <typename Scalar>
FNCoordinates<Scalar> twist_flow(FNCoordinates<Scalar> fn, int i, Complex<Scalar> t) {
  fn.tau.at(static_cast<std::size_t>(i)) += t;
  return fn;
}

template <typename Scalar>
struct Representation {
  std::shared_ptr<const SurfaceGroupPresentation> presentation;
  std::vector<MoebiusMap<Scalar>> images;  // images[k - 1] is the image of letter k

  const MoebiusMap<Scalar>& image(int letter) const { return images[static_cast<std::size_t>(letter - 1)]; }
};

template <typename Scalar>
MoebiusMap<Scalar> evaluate_word(const Representation<Scalar>& rep, const Word& w) {
  Matrix2c<Scalar> m = Matrix2c<Scalar>::Identity();
  const int rank = static_cast<int>(rep.images.size());
  for (int x : w) {
    if (x == 0 || std::abs(x) > rank) throw UnknownGenerator("letter " + std::to_string(x) + " is not a generator");
    m = m * (x > 0 ? rep.image(x) : rep.image(-x).inverse()).matrix();
  }
  return MoebiusMap<Scalar>::from_unimodular(m);
}

template <typename Scalar>
Scalar relator_residual(const Representation<Scalar>& rep) {
  const Matrix2c<Scalar> r = evaluate_word(rep, rep.presentation->relator).matrix();
  return max_abs(r - Matrix2c<Scalar>::Identity());
}

template <typename Scalar>
ComplexLength<Scalar> complex_length_of_curve(const Representation<Scalar>& rep, const Word& w) {
  const MoebiusMap<Scalar> m = evaluate_word(rep, w);
  if (classify(m) != MoebiusClass::loxodromic) throw NotLoxodromic("curve image is " + std::string(to_string(classify(m))));
  return complex_displacement(m);
}

/// Below this distance from the +-pi seam a complex length is not accepted,
/// so that every FD stencil around an accepted point stays on one branch.
inline constexpr double kBranchMargin = 1e-3;

/// Holonomy of every edge of the cell complex. Each pants is put in the
/// normal form of pants_representation with half-lengths l/2 and then
/// conjugated so that its first cuff axis runs 0 -> infinity with the common
/// perpendicular to the second cuff through 1. Across a gluing the frames of
/// the two cuffs are matched by the axial translation T(tau) followed by the
/// half-turn z -> -1/z.
template <typename Scalar>
std::vector<MoebiusMap<Scalar>> edge_holonomies(const SurfaceGroupPresentation& pres, const FNCoordinates<Scalar>& fn) {
  using C = Complex<Scalar>;
  using Map = MoebiusMap<Scalar>;
  const auto& g = pres.graph;
  if (fn.size() != g.curve_count() || fn.tau.size() != fn.l.size())
    throw DegenerateFN("coordinate count does not match the curve count");
  const Scalar seam = std::numbers::pi_v<Scalar> - Scalar(kBranchMargin);
  for (int k = 0; k < fn.size(); ++k) {
    if (!(fn.l[k].real() > 0)) throw DegenerateFN("curve " + g.gluings[k].curve + " has Re(l) <= 0");
    if (std::abs(fn.l[k].imag()) >= seam) throw BranchFailure("curve " + g.gluings[k].curve + " has Im(l) at the branch seam");
  }

  std::vector<std::array<C, 3>> cuff_length(static_cast<std::size_t>(g.pants_count));
  for (int k = 0; k < fn.size(); ++k)
    for (const CuffRef& c : g.gluings[k].ends) cuff_length[c.pants][c.cuff] = fn.l[k];

  struct Centred {
    std::array<Map, 3> cuffs;
    std::vector<OrientedGeodesic<Scalar>> axes;
  };
  std::vector<Centred> pants;
  for (int p = 0; p < g.pants_count; ++p) {
    PantsBoundaryData<Scalar> d;
    for (int i = 0; i < 3; ++i) d.sigma[i] = cuff_length[p][i] / Scalar(2);
    PantsRepresentation<Scalar> rep = [&] {
      try {
        return pants_representation(d);
      } catch (const ReduciblePants& e) {
        throw DegenerateFN(e.what());
      }
    }();
    const Map K = frame_map(rep.axes[0], common_perpendicular(rep.axes[0], rep.axes[1]).attracting());
    const Map Ki = K.inverse();
    Centred c;
    for (int i = 0; i < 3; ++i) {
      c.cuffs[i] = Map::from_unimodular((Ki * rep.cuffs[i] * K).matrix());
      c.axes.push_back(apply(Ki, rep.axes[i]));
    }
    pants.push_back(std::move(c));
  }

  auto cuff_frame = [&](CuffRef c) {
    const auto& ax = pants[c.pants].axes;
    return frame_map(ax[c.cuff], common_perpendicular(ax[c.cuff], ax[(c.cuff + 1) % 3]).attracting());
  };
  Matrix2c<Scalar> flip;
  flip << C(0), C(-1), C(1), C(0);

  std::vector<Map> out;
  for (const auto& e : pres.complex.edges) {
    switch (e.kind) {
      case CellComplex::Kind::spoke:
        out.push_back(Map::identity());
        break;
      case CellComplex::Kind::cuff:
        out.push_back(pants[e.cuff.pants].cuffs[e.cuff.cuff]);
        break;
      case CellComplex::Kind::gluing: {
        const Gluing& gl = g.gluings[e.curve];
        const Map G = cuff_frame(gl.ends[0]) * Map::axial(fn.tau[e.curve]) * Map::from_unimodular(flip) *
                      cuff_frame(gl.ends[1]).inverse();
        out.push_back(G);
        break;
      }
    }
  }
  return out;
}

namespace detail {

template <typename Scalar>
Matrix2c<Scalar> path_product(const std::vector<MoebiusMap<Scalar>>& hol, const Word& path) {
  Matrix2c<Scalar> m = Matrix2c<Scalar>::Identity();
  for (int e : path) {
    const auto& h = hol[static_cast<std::size_t>(std::abs(e) - 1)];
    m = m * (e > 0 ? h : h.inverse()).matrix();
  }
  return m;
}

}  // namespace detail

/// Images of the raw generators (non-tree edges closed up through the tree).
template <typename Scalar>
std::vector<MoebiusMap<Scalar>> raw_generator_images(const SurfaceGroupPresentation& pres,
                                                     const std::vector<MoebiusMap<Scalar>>& hol) {
  const auto& cx = pres.complex;
  std::vector<MoebiusMap<Scalar>> raw;
  for (int e : pres.raw_edges) {
    const auto& ed = cx.edges[static_cast<std::size_t>(e - 1)];
    const Matrix2c<Scalar> m = detail::path_product(hol, cx.tree_path[static_cast<std::size_t>(ed.src)]) *
                               hol[static_cast<std::size_t>(e - 1)].matrix() *
                               MoebiusMap<Scalar>::from_unimodular(
                                   detail::path_product(hol, cx.tree_path[static_cast<std::size_t>(ed.dst)]))
                                   .inverse()
                                   .matrix();
    raw.push_back(MoebiusMap<Scalar>::from_unimodular(m));
  }
  return raw;
}

/// Representation of the standard generators from edge holonomies, optionally
/// conjugated by `gauge`.
template <typename Scalar>
Representation<Scalar> assemble(std::shared_ptr<const SurfaceGroupPresentation> pres,
                                const std::vector<MoebiusMap<Scalar>>& hol,
                                const std::optional<MoebiusMap<Scalar>>& gauge = std::nullopt) {
  Representation<Scalar> raw{pres, raw_generator_images(*pres, hol)};
  Representation<Scalar> rep{pres, {}};
  for (const Word& w : pres->generator_in_raw) {
    MoebiusMap<Scalar> m = evaluate_word(raw, w);
    if (gauge) m = m.conjugated_by(*gauge);
    rep.images.push_back(m);
  }
  return rep;
}

template <typename Scalar>
Representation<Scalar> holonomy(std::shared_ptr<const SurfaceGroupPresentation> pres, const FNCoordinates<Scalar>& fn,
                                const std::optional<MoebiusMap<Scalar>>& gauge = std::nullopt) {
  return assemble(pres, edge_holonomies(*pres, fn), gauge);
}

template <typename Scalar>
Representation<Scalar> holonomy(const PantsDecompositionGraph& graph, const FNCoordinates<Scalar>& fn) {
  return holonomy(std::make_shared<const SurfaceGroupPresentation>(build_presentation(graph)), fn);
}

/// Largest |Im| over generator entries after conjugating the representation
/// so that the first generator has axis 0 -> infinity and the second one its
/// attracting fixed point at 1. Zero exactly when the group is Fuchsian.
template <typename Scalar>
Scalar fuchsian_residual(const Representation<Scalar>& rep) {
  const auto F = frame_map(fixed_points(rep.images.at(0)), fixed_points(rep.images.at(1)).attracting());
  Scalar r = 0;
  for (const auto& m : rep.images) r = std::max(r, m.conjugated_by(F.inverse()).matrix().imag().cwiseAbs().maxCoeff());
  return r;
}

}  // namespace qfs
