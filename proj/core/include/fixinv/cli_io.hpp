#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fixinv/bound_states.hpp"
#include "fixinv/config.hpp"
#include "fixinv/forward_solver.hpp"
#include "fixinv/gl_reconstruction.hpp"
#include "fixinv/tuning.hpp"

namespace fixinv {

/// Weighted combination of spin-split phases.
double combine_spin_phases(int l, double delta_plus, double delta_minus);

/// Phase file grammar: "k = <real>" and "a = <real>" headers, then rows
/// "l delta" or "l delta_plus delta_minus"; '#' starts a comment.
PhaseShiftSet parse_phase_text(const std::string& text);
PhaseShiftSet parse_phase_file(const std::string& path);

std::string format_phase_file(const PhaseShiftSet& phases);
void write_phase_file(const std::string& path, const PhaseShiftSet& phases);

/// "r,q" with 12 significant digits.
std::string format_curve_csv(const PotentialCurve& curve);

/// key=value lines plus [moments], [coefficients], [bound_states] tables.
std::string format_report(const Reconstruction& rec, const InversionConfig& cfg);

std::string format_bound_states(const BoundStateSet& set, double kappa_a, double c, double h);

std::string format_tune(const TuneResult& result);

/// Pinned inversion run used by the reproduce subcommand and the acceptance
/// suite.
struct ScenarioRun {
  std::string label;
  PhaseShiftSet phases;
  InversionConfig cfg;
  double energy_scale = 1.0;  // V = energy_scale * q
  std::string energy_unit;    // empty when q is reported directly
  bool has_reference = false;  // constant reference potential
  double reference = 0.0;
  double ref_lo = 0.0, ref_hi = 0.0;  // window for the deviation metric
};

std::vector<std::string> scenario_names();

/// max |q - ref| over samples with lo <= r <= hi.
double max_deviation(const PotentialCurve& q, double ref, double lo, double hi);

struct CurveMinimum {
  double r = 0.0;
  double value = 0.0;
};

/// Smallest sample with lo <= r <= hi.
CurveMinimum global_minimum(const PotentialCurve& q, double lo, double hi);

/// Interior local minima with lo <= r <= hi.
std::vector<CurveMinimum> local_minima(const PotentialCurve& q, double lo, double hi);

std::vector<ScenarioRun> scenario_runs(const std::string& name);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace fixinv
