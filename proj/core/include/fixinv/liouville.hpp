#pragma once

#include <vector>

#include "fixinv/forward_solver.hpp"

namespace fixinv {

/// Parameters of the map x = c log(r/a); c must be negative.
struct TransformParams {
  double a = 1.0;
  double c = -1.0;
  double k = 1.0;

  void validate() const;
};

struct CurveMeta {
  double k = 0.0;
  double a = 0.0;
  double c = 0.0;
  double h = 0.0;
};

/// Sampled function; grid strictly increasing.
struct PotentialCurve {
  std::vector<double> grid;
  std::vector<double> values;
  CurveMeta meta;

  std::size_t size() const noexcept { return grid.size(); }
};

double x_of_r(double r, const TransformParams& p);
double r_of_x(double x, const TransformParams& p);

/// Q(x) = (a/c)^2 e^{2x/c} (q(a e^{x/c}) - k^2).
double auxiliary_potential(const RadialPotential& q, const TransformParams& p, double x);

/// Maps Q on an x grid to q(r) = k^2 + (c/r)^2 Q on the image r grid
/// (returned in increasing r).
PotentialCurve physical_potential(const PotentialCurve& Q, const TransformParams& p);

}  // namespace fixinv
