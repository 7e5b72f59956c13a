#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fixinv/config.hpp"
#include "fixinv/liouville.hpp"

namespace fixinv {

/// Total variation of q on [r0, a] from a monotone cubic through the samples,
/// evaluated at ten times the sample density.
double smoothness(const PotentialCurve& q, double r0, double a);

struct TuneCell {
  double c = 0.0;
  double h = 0.0;
  bool ok = false;
  double s = 0.0;
  std::string diagnostics;
};

/// Winner order: smaller s (ties within 1e-12), then smaller |c|, smaller |h|,
/// then c and h themselves.
bool tune_less(const TuneCell& a, const TuneCell& b);

struct TuneGrid {
  std::vector<double> c_values;
  std::vector<double> h_values;
  double r0 = 0.05;
  std::vector<TuneCell> results;  // filled by grid_search, c-major order
};

struct TuneResult {
  TuneCell best;
  TuneGrid grid;
};

/// Reconstructs every (c, h) cell with `base` as template. Failed cells are
/// recorded; jobs > 1 evaluates cells on worker threads.
TuneResult grid_search(const PhaseShiftSet& phases, const TuneGrid& grid,
                       const InversionConfig& base, int jobs = 1);

}  // namespace fixinv
