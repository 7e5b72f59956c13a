#pragma once

#include <vector>

#include "fixinv/extended.hpp"
#include "fixinv/forward_solver.hpp"

namespace fixinv {

struct MomentSet {
  std::vector<Extended> mu;  // l = 0..L-1
  double ka = 0.0;
  double c = -1.0;
  double h = 0.0;

  int size() const noexcept { return static_cast<int>(mu.size()); }
  std::vector<double> as_double() const;
};

/// m-function of the auxiliary problem at lambda = -(l+1/2)^2/c^2.
double m_value(int l, double delta, double ka, double c);

/// Free m-function at the same point, (l+1/2)/c.
double m0_value(int l, double c);

double moment(int l, double delta, double ka, double c, double h);

/// Moment from tan(delta) carried in extended precision.
Extended moment_ext(int l, const Extended& tan_delta, double ka, double c, double h);

/// First `count` moments (all phases when count < 0). Uses exact_tan when
/// the phase set carries it.
MomentSet compute_moments(const PhaseShiftSet& phases, double c, double h, int count = -1);

}  // namespace fixinv
