#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fixinv/extended.hpp"

namespace fixinv {

/// Radial potential q(r), clamped to zero for r >= a.
class RadialPotential {
 public:
  enum class Kind { constant, gauss, woods_saxon, tabulated };

  /// q = value for r < a.
  static RadialPotential constant(double value, double a);
  /// q = depth * exp(-alpha r^2).
  static RadialPotential gauss(double depth, double alpha, double a);
  /// q = depth / (1 + exp((r - radius)/diffuseness)).
  static RadialPotential woods_saxon(double depth, double radius,
                                     double diffuseness, double a);
  /// Monotone cubic through (r, q); at least four nodes.
  static RadialPotential tabulated(std::vector<double> r, std::vector<double> q,
                                   double a);

  double operator()(double r) const;

  Kind kind() const noexcept { return kind_; }
  double a() const noexcept { return a_; }
  const std::map<std::string, double>& params() const noexcept { return params_; }

 private:
  struct Table;
  Kind kind_ = Kind::constant;
  double a_ = 1.0;
  std::map<std::string, double> params_;
  std::shared_ptr<const Table> table_;
};

struct PhaseShiftSet {
  double k = 1.0;
  double a = 1.0;
  std::vector<double> deltas;  // radians, in (-pi/2, pi/2]
  /// Optional tan(delta_l) carried at full extended precision; when present
  /// the moment stage uses it instead of tan(deltas[l]).
  std::vector<Extended> exact_tan;

  int size() const noexcept { return static_cast<int>(deltas.size()); }
};

struct ForwardOptions {
  double ode_tol = 1e-10;
  double start_fraction = 1e-6;  // integration starts at start_fraction * a
};

PhaseShiftSet solve_phase_shifts(const RadialPotential& pot, double k, int l_max,
                                 const ForwardOptions& opts = {});

double constant_well_phase_shift(double C, double a, double k, int l);

/// tan(delta_l), l = 0..l_max, for the constant well in extended precision.
std::vector<Extended> constant_well_tan(double C, double a, double k, int l_max);

/// Phase set for the constant well with exact_tan populated.
PhaseShiftSet constant_well_phases(double C, double a, double k, int l_max);

}  // namespace fixinv
