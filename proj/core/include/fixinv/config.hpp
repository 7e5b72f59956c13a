#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fixinv/bound_states.hpp"
#include "fixinv/moment_solver.hpp"

namespace fixinv {

enum class BsMode { zero, one, multi };

const char* to_string(BsMode m);
BsMode parse_bs_mode(const std::string& s);

struct InversionConfig {
  double c = -1.0;
  double h = 0.0;
  int n_phases = -1;  // < 0: all available phases
  BsMode mode = BsMode::zero;
  int bs_count = 2;  // multi mode only
  bool drop_c0 = false;

  double r_min_fraction = 0.01;  // GL truncation at r_min = fraction * a
  double r0 = 0.05;              // lower end of the smoothness integral
  double gl_step_fraction = 0.02;  // GL step = fraction * |c|

  std::optional<std::pair<double, double>> trial_lambdas;  // one-BS; default (-1,-4)/c^2
  std::vector<double> initial_lambdas;  // multi-BS; empty = assess automatically
  AssessmentModel assessment = AssessmentModel::free_motion;
  double assessment_q0 = 0.0;  // used with AssessmentModel::origin_value
  MultiBsOptions multi;

  void validate() const;
};

}  // namespace fixinv
