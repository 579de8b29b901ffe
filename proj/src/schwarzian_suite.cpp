#include "qfs/schwarzian_suite.hpp"

#include <random>

#include "qfs/schwarzian.hpp"

namespace qfs {

namespace {

using S = long double;
using C = std::complex<S>;

struct Draws {
  std::mt19937_64 rng;
  std::normal_distribution<double> normal{0.0, 1.0};
  std::uniform_real_distribution<double> unit{-1.0, 1.0};

  C gauss() { return {normal(rng), normal(rng)}; }
  C disk(double r) {
    for (;;) {
      const C z(unit(rng), unit(rng));
      if (std::abs(z) <= 1) return z * S(r);
    }
  }
};

// The same family member twice: with exact derivatives and without.
std::pair<HolomorphicSample<S>, HolomorphicSample<S>> random_member(Draws& d, int kind) {
  switch (kind) {
    case 0: {
      std::array<C, 4> c{d.disk(1), C(1) + d.disk(0.3), d.disk(0.3), d.disk(0.3)};
      return {cubic_sample<S>(c, true), cubic_sample<S>(c, false)};
    }
    case 1:
      return {exp_sample<S>(true), exp_sample<S>(false)};
    default: {
      const C a = C(1) + d.disk(0.5), b = d.disk(1), c = d.disk(0.3), dd = C(1) + d.disk(0.2);
      return {moebius_sample<S>(a, b, c, dd, true), moebius_sample<S>(a, b, c, dd, false)};
    }
  }
}

// Derivative bounded away from 0 and infinity: no nearby critical point or pole.
bool tame(const HolomorphicSample<S>& exact, C z) {
  const S m = std::abs(exact.derivative[0](z));
  return m >= S(0.2) && m <= S(5);
}

}  // namespace

SchwarzianSuiteResult schwarzian_property_suite(std::uint64_t seed, int moebius_trials, int cocycle_trials) {
  Draws d{std::mt19937_64(seed)};
  SchwarzianSuiteResult r;

  for (int t = 0; t < moebius_trials; ++t) {
    const C a = d.gauss(), b = d.gauss(), c = d.gauss(), dd = d.gauss();
    C z0;
    do z0 = d.disk(2);
    while (std::abs(c * z0 + dd) < 0.5);
    auto exact = moebius_sample<S>(a, b, c, dd, true);
    auto numeric = moebius_sample<S>(a, b, c, dd, false);
    // A stencil circle must stay clear of the pole.
    numeric.radius = std::min<S>(1, std::abs(c * z0 + dd) / (S(4) * std::max<S>(std::abs(c), 1e-12)));
    r.moebius_max = std::max(r.moebius_max, static_cast<double>(std::abs(schwarzian_at(exact, z0))));
    r.moebius_stencil_max = std::max(r.moebius_stencil_max, static_cast<double>(std::abs(schwarzian_at(numeric, z0))));
    ++r.moebius_trials;
  }

  for (int t = 0; t < cocycle_trials; ++t) {
    std::pair<HolomorphicSample<S>, HolomorphicSample<S>> fp, gp;
    C z0;
    do {
      fp = random_member(d, t % 3);
      gp = random_member(d, (t / 3) % 3);
      z0 = d.disk(0.5);
    } while (!tame(fp.first, z0) || !tame(gp.first, fp.first.f(z0)));
    const auto& f = fp.second;
    const auto& g = gp.second;
    r.cocycle_max = std::max(r.cocycle_max, static_cast<double>(cocycle_check(f, g, z0)));

    const C lambda = C(1) + d.disk(0.5);
    HolomorphicSample<S> scaled;
    scaled.f = [f, lambda](C w) { return f.f(lambda * w); };
    const C z1 = z0 / lambda;
    const C lhs = schwarzian_at(scaled, z1);
    const C rhs = lambda * lambda * schwarzian_at(f, lambda * z1);
    r.chart_max = std::max(r.chart_max, static_cast<double>(std::abs(lhs - rhs)));
    ++r.cocycle_trials;
  }
  return r;
}

}  // namespace qfs
