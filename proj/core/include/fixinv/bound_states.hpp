#pragma once

#include <vector>

namespace fixinv {

/// Exponential well Q(x) = -s exp(-2 t x) with boundary parameter h.
struct ExpWellParams {
  double s = 1.0;
  double t = 1.0;
  double h = 0.0;
  double kappa_a = 1.0;

  /// s = (kappa_a / c)^2, t = 1/|c|.
  static ExpWellParams from_kappa_a(double kappa_a, double c, double h);
  void validate() const;
};

struct BoundStateSet {
  int count = 0;
  std::vector<double> lambdas;  // increasing, all negative
  std::vector<double> weights;  // step heights, may be empty
  bool near_boundary = false;
};

/// Positive zeros of J_1 below x_max (sign change + bisection).
std::vector<double> bessel_j1_zeros(double x_max);

/// Zeros of J_1 in [0, kappa_a), counting the origin. `near_boundary` is set
/// when kappa_a lies within 1e-9 of a sector boundary.
int count_bound_states_h0(double kappa_a, bool* near_boundary = nullptr);

BoundStateSet bound_state_positions(const ExpWellParams& p);

/// Height of the spectral step at a bound state lambda0.
double step_height(double lambda0, const ExpWellParams& p);

enum class Reducibility { already_one, reducible, outside_lemma };

Reducibility reducibility_window(double kappa_a);
const char* to_string(Reducibility r);

/// How kappa is chosen when assessing a non-constant potential.
enum class AssessmentModel {
  free_motion,  // kappa = k
  origin_value  // kappa^2 = k^2 - q(0)
};

/// kappa * a for the chosen model; q0 is ignored for free motion.
double assessment_kappa_a(double k, double a, AssessmentModel model, double q0 = 0.0);

/// Positions and step heights of the assessed auxiliary bound states.
BoundStateSet assess(double kappa_a, double c, double h);

}  // namespace fixinv
