#pragma once

#include <cstdint>

namespace qfs {

struct SchwarzianSuiteResult {
  int moebius_trials = 0;
  double moebius_max = 0;          // max |Sf| over random Moebius maps, exact derivatives
  double moebius_stencil_max = 0;  // same, derivatives from the contour stencil
  int cocycle_trials = 0;
  double cocycle_max = 0;          // max cocycle residual, all derivatives numeric
  double chart_max = 0;            // max |S(f(l w))(z) - l^2 Sf(l z)|
};

/// Random property checks of the Schwarzian: the Moebius kernel, the
/// composition law on cubics, exp and Moebius maps, and the chart-change law
/// under scalings. Deterministic in `seed`.
SchwarzianSuiteResult schwarzian_property_suite(std::uint64_t seed, int moebius_trials = 50, int cocycle_trials = 100);

}  // namespace qfs
