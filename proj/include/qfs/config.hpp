#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qfs/holonomy.hpp"
#include "qfs/presentation.hpp"

namespace qfs {

struct NumericOptions {
  double fd_step = 1e-4;
  double tol = 1e-4;
  int word_length = 6;
};

/// A surface as read from its JSON description:
///
///   { "genus": 2,
///     "pants": [{"id": "P"}, {"id": "Q"}],
///     "gluings": [{"curve": "a1", "ends": [[0, 0], [1, 0]]}, ...],
///     "fn": {"a1": {"l": [2.0, 0.0], "tau": [0.3, 0.0]}, ...},
///     "options": {"fd_step": 1e-4, "tol": 1e-4, "word_length": 6} }
///
/// "options" and each of its fields are optional.
struct SurfaceConfig {
  std::vector<std::string> pants_ids;
  PantsDecompositionGraph graph;
  FNCoordinates<double> fn;
  NumericOptions options;
};

/// Validates completely or throws a ConfigError whose path() is a JSON
/// pointer to the offending field (SchemaError, CountMismatch, DanglingCuff).
SurfaceConfig parse_config(const std::string& text);
SurfaceConfig load_config(const std::string& path);

std::string dump_config(const SurfaceConfig& config);

}  // namespace qfs
