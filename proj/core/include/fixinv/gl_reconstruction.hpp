#pragma once

#include <vector>

#include "fixinv/config.hpp"
#include "fixinv/liouville.hpp"
#include "fixinv/moment_solver.hpp"
#include "fixinv/spectral_data.hpp"

namespace fixinv {

/// Uniform grid x_j = j * step, j = 0..M, on which the GL equation is solved.
struct GLGrid {
  double x_max = 0.0;
  double step = 0.0;
  std::vector<double> nodes;
  std::vector<double> K_diag;  // K(x_j, x_j), filled by solve_gl
  double max_residual = 0.0;   // worst discretised row residual

  /// Grid with M = ceil(x_max / step) intervals; the step is shrunk so that
  /// M * step = x_max.
  static GLGrid uniform(double x_max, double step);
  int intervals() const noexcept { return static_cast<int>(nodes.size()) - 1; }
};

/// F(x, t) = (F(x + t) + F(|x - t|)) / 2.
double kernel_F2(const SpectralExpansion& exp, double x, double t);

GLGrid solve_gl(const SpectralExpansion& exp, GLGrid grid);

/// Q = 2 dK(x,x)/dx by fourth-order differences.
PotentialCurve potential_from_K(const GLGrid& grid);

struct ReconstructionReport {
  MomentSet moments;
  SpectralExpansion expansion;
  BsMode mode = BsMode::zero;
  std::vector<double> assessed_lambdas;  // multi mode initial guesses
  double f0_plus_h = 0.0;
  double smoothness = 0.0;
  double q_at_a = 0.0;  // last reconstructed sample below a
  double gl_residual = 0.0;
  double x_max = 0.0;
  double gl_step = 0.0;
};

struct Reconstruction {
  PotentialCurve q;  // on r, increasing
  PotentialCurve Q;  // on x, increasing
  ReconstructionReport report;
};

Reconstruction reconstruct(const PhaseShiftSet& phases, const InversionConfig& cfg);

/// Spectral expansion only (moment stage of reconstruct).
SpectralExpansion solve_expansion(const MomentSet& mu, const PhaseShiftSet& phases,
                                  const InversionConfig& cfg,
                                  std::vector<double>* assessed = nullptr);

}  // namespace fixinv
