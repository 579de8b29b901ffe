#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <unordered_set>
#include <vector>

#include "qfs/holonomy.hpp"

namespace qfs {

/// Attracting fixed points of group elements, with the length of the first
/// (shortest, then lexicographically least) word producing each point.
struct LimitSetCloud {
  std::vector<std::complex<double>> points;
  std::vector<int> word_length;

  std::size_t size() const { return points.size(); }
};

/// Points closer than this in chordal distance are merged.
inline constexpr double kLimitSetResolution = 1e-10;

namespace detail {

// Grid on the Riemann sphere, cell size kLimitSetResolution.
class SphereGrid {
 public:
  bool insert(std::complex<double> z) {
    const double n = 1.0 + std::norm(z);
    const double p[3] = {2.0 * z.real() / n, 2.0 * z.imag() / n, (std::norm(z) - 1.0) / n};
    long long c[3];
    for (int i = 0; i < 3; ++i) c[i] = static_cast<long long>(std::floor(p[i] / kLimitSetResolution));
    for (long long dx = -1; dx <= 1; ++dx)
      for (long long dy = -1; dy <= 1; ++dy)
        for (long long dz = -1; dz <= 1; ++dz)
          if (cells_.count(key(c[0] + dx, c[1] + dy, c[2] + dz))) return false;
    cells_.insert(key(c[0], c[1], c[2]));
    return true;
  }

 private:
  static std::uint64_t key(long long a, long long b, long long c) {
    std::uint64_t h = 1469598103934665603ull;
    for (long long v : {a, b, c}) h = (h ^ static_cast<std::uint64_t>(v)) * 1099511628211ull;
    return h;
  }
  std::unordered_set<std::uint64_t> cells_;
};

}  // namespace detail

/// Breadth-first over freely reduced words of length 1..L in the order of
/// alphabet(rank); non-loxodromic images and points at infinity are skipped.
template <typename Scalar>
LimitSetCloud limit_set(const Representation<Scalar>& rep, int L) {
  const int rank = static_cast<int>(rep.images.size());
  const auto letters = alphabet(rank);
  std::vector<MoebiusMap<Scalar>> gens;
  for (int x : letters) gens.push_back(x > 0 ? rep.image(x) : rep.image(-x).inverse());

  struct Node {
    int last;  // index into letters
    MoebiusMap<Scalar> m;
  };
  std::vector<Node> level{{-1, MoebiusMap<Scalar>::identity()}};
  LimitSetCloud cloud;
  detail::SphereGrid grid;
  for (int n = 1; n <= L; ++n) {
    std::vector<Node> next;
    next.reserve(level.size() * letters.size());
    for (const Node& node : level)
      for (std::size_t i = 0; i < letters.size(); ++i) {
        if (node.last >= 0 && letters[i] == -letters[static_cast<std::size_t>(node.last)]) continue;
        next.push_back({static_cast<int>(i), node.m * gens[i]});
      }
    for (const Node& node : next) {
      if (classify(node.m) != MoebiusClass::loxodromic) continue;
      const ProjectivePoint<Scalar> p = fixed_points(node.m).attracting();
      if (std::abs(p.w()) < Scalar(1e-12)) continue;
      const auto z = p.value();
      const std::complex<double> zd(static_cast<double>(z.real()), static_cast<double>(z.imag()));
      if (grid.insert(zd)) {
        cloud.points.push_back(zd);
        cloud.word_length.push_back(n);
      }
    }
    level = std::move(next);
  }
  return cloud;
}

/// (a, b; c, d) = (a - c)(b - d) / ((a - d)(b - c)).
inline std::complex<double> cross_ratio(std::complex<double> a, std::complex<double> b, std::complex<double> c,
                                        std::complex<double> d) {
  return (a - c) * (b - d) / ((a - d) * (b - c));
}

/// CSV with header re,im,word_length.
void write_csv(std::ostream& os, const LimitSetCloud& cloud);

/// Points as circles of radius 0.5 in a 1000-unit-wide canvas covering the
/// bounding box plus a 5% margin on each side.
void write_svg(std::ostream& os, const LimitSetCloud& cloud);

}  // namespace qfs
