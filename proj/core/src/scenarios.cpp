#include <cmath>
#include <limits>

#include "fixinv/cli_io.hpp"
#include "fixinv/error.hpp"

namespace fixinv {

namespace {

// hbar^2 / (2 mu) for n + alpha, MeV fm^2
constexpr double kNeutronAlpha = 25.945;
// e-Ar collision energy in Hartree
constexpr double kEArEnergy = 0.4412;

double round_sig(double v, int digits) {
  if (v == 0.0) return 0.0;
  const double e = std::pow(10.0, std::floor(std::log10(std::abs(v))) - digits + 1);
  return std::round(v / e) * e;
}

PhaseShiftSet rounded(PhaseShiftSet p, int digits) {
  for (auto& d : p.deltas) d = round_sig(d, digits);
  p.exact_tan.clear();
  return p;
}

ScenarioRun constant_run(const std::string& label, double C, double a, int n, double c, double h,
                         BsMode mode, double lo, double hi) {
  ScenarioRun run;
  run.label = label;
  run.phases = constant_well_phases(C, a, 1.0, n - 1);
  run.cfg.c = c;
  run.cfg.h = h;
  run.cfg.mode = mode;
  run.has_reference = true;
  run.reference = C;
  run.ref_lo = lo;
  run.ref_hi = hi;
  return run;
}

ScenarioRun table_run(const std::string& label, double k, double a, double c, double h,
                      std::vector<double> deltas, double scale, const std::string& unit) {
  ScenarioRun run;
  run.label = label;
  run.phases.k = k;
  run.phases.a = a;
  run.phases.deltas = std::move(deltas);
  run.cfg.c = c;
  run.cfg.h = h;
  run.cfg.mode = BsMode::one;
  run.energy_scale = scale;
  run.energy_unit = unit;
  return run;
}

}  // namespace

std::vector<std::string> scenario_names() {
  return {"barrier-one", "barrier-zero", "well", "gauss", "ws", "e-ar", "n-alpha"};
}

std::vector<ScenarioRun> scenario_runs(const std::string& name) {
  std::vector<ScenarioRun> runs;
  if (name == "barrier-one") {
    runs.push_back(constant_run("barrier-one", 1.2, 2.0, 11, -0.3, -0.5, BsMode::one, 0.3, 1.9));
  } else if (name == "barrier-zero") {
    runs.push_back(constant_run("barrier-zero-a", 1.2, 2.0, 11, -1.0, 0.0, BsMode::zero, 0.3, 1.9));
    runs.push_back(constant_run("barrier-zero-b", 1.2, 2.0, 11, -1.0, -0.15, BsMode::zero, 0.3, 1.9));
    runs.push_back(constant_run("barrier-zero-c", 1.2, 2.0, 11, -0.3, 0.0, BsMode::zero, 0.3, 1.9));
    runs.push_back(constant_run("barrier-zero-d", 1.2, 2.0, 11, -0.3, -0.15, BsMode::zero, 0.3, 1.9));
  } else if (name == "well") {
    runs.push_back(constant_run("well-a", 0.8, 2.0, 11, -1.0, 0.0, BsMode::one, 0.5, 2.0));
    runs.push_back(constant_run("well-b", 0.8, 2.0, 11, -0.5, -0.65, BsMode::one, 0.5, 2.0));
    auto c = constant_run("well-c", 0.8, 11.0, 11, -1.5, 0.0, BsMode::multi, 1.1, 10.5);
    c.cfg.bs_count = 2;
    c.cfg.assessment = AssessmentModel::origin_value;
    c.cfg.assessment_q0 = 0.8;
    runs.push_back(c);
    runs.push_back(constant_run("well-d", 0.8, 11.0, 11, -1.5, 5.0, BsMode::one, 1.1, 10.5));
  } else if (name == "gauss") {
    const auto pot = RadialPotential::gauss(-4.0, 5.0, 1.5);
    ScenarioRun run;
    run.label = "gauss";
    run.phases = rounded(solve_phase_shifts(pot, 1.5, 6, {1e-12, 1e-6}), 4);
    run.cfg.c = -0.74;
    run.cfg.h = 0.0;
    run.cfg.mode = BsMode::one;
    runs.push_back(run);
  } else if (name == "ws") {
    const auto pot = RadialPotential::woods_saxon(-4.0, 0.5, 0.1, 2.0);
    ScenarioRun run;
    run.label = "ws";
    run.phases = rounded(solve_phase_shifts(pot, 1.5, 3, {1e-12, 1e-6}), 2);
    run.cfg.c = -1.25;
    run.cfg.h = 0.0;
    run.cfg.mode = BsMode::one;
    runs.push_back(run);
  } else if (name == "e-ar") {
    runs.push_back(table_run("e-ar", std::sqrt(2.0 * kEArEnergy), 3.9, -3.70, 1.9,
                             {-1.218, -0.626, 1.191, 0.118}, 0.5, "au"));
  } else if (name == "n-alpha") {
    auto k = [](double e) { return std::sqrt(e / kNeutronAlpha); };
    runs.push_back(table_run("n-alpha-9.6", k(9.6), 3.9, -4.25, 0.0, {1.763, 1.553, 0.028},
                             kNeutronAlpha, "MeV"));
    runs.push_back(table_run("n-alpha-12.8", k(12.8), 3.4, -2.96, 0.0, {1.676, 1.466, 0.066},
                             kNeutronAlpha, "MeV"));
    runs.push_back(table_run("n-alpha-16.0", k(16.0), 3.3, -2.37, 0.0, {1.588, 1.396, 0.117},
                             kNeutronAlpha, "MeV"));
  } else {
    throw DomainError(Stage::input, "unknown scenario '" + name + "'");
  }
  return runs;
}

double max_deviation(const PotentialCurve& q, double ref, double lo, double hi) {
  double m = 0.0;
  bool any = false;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q.grid[i] < lo || q.grid[i] > hi) continue;
    m = std::max(m, std::abs(q.values[i] - ref));
    any = true;
  }
  if (!any) throw DomainError(Stage::input, "no samples inside the deviation window");
  return m;
}

CurveMinimum global_minimum(const PotentialCurve& q, double lo, double hi) {
  CurveMinimum best{0.0, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q.grid[i] < lo || q.grid[i] > hi) continue;
    if (q.values[i] < best.value) best = {q.grid[i], q.values[i]};
  }
  if (!std::isfinite(best.value)) throw DomainError(Stage::input, "no samples inside the window");
  return best;
}

std::vector<CurveMinimum> local_minima(const PotentialCurve& q, double lo, double hi) {
  std::vector<CurveMinimum> out;
  for (std::size_t i = 1; i + 1 < q.size(); ++i) {
    if (q.grid[i] < lo || q.grid[i] > hi) continue;
    if (q.values[i] < q.values[i - 1] && q.values[i] < q.values[i + 1]) {
      out.push_back({q.grid[i], q.values[i]});
    }
  }
  return out;
}

}  // namespace fixinv
