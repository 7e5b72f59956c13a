#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fixinv/cli_io.hpp"
#include "fixinv/error.hpp"

namespace fixinv {

namespace {

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError(Stage::input, "cannot write '" + path + "'");
  f << text;
  if (!f) throw DomainError(Stage::input, "write failed for '" + path + "'");
}

std::vector<double> parse_range(const std::string& spec, const char* name) {
  // "lo:hi:n" or comma list
  std::vector<double> out;
  auto to_d = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) {
      throw DomainError(Stage::input, std::string(name) + ": bad number '" + s + "'");
    }
    return v;
  };
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw DomainError(Stage::input, std::string(name) + ": expected lo:hi:n");
    const double lo = to_d(parts[0]), hi = to_d(parts[1]);
    const double nd = to_d(parts[2]);
    const int n = static_cast<int>(nd);
    if (n < 1 || n != nd) throw DomainError(Stage::input, std::string(name) + ": n must be >= 1");
    for (int i = 0; i < n; ++i) out.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
  } else {
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ',');) out.push_back(to_d(p));
  }
  if (out.empty()) throw DomainError(Stage::input, std::string(name) + ": empty range");
  return out;
}

struct InvertFlags {
  double c = -1.0, h = 0.0;
  int n_phases = -1;
  std::string mode = "zero";
  int bs_count = 2;
  bool drop_c0 = false;
  double r_min = 0.01, r0 = 0.05, gl_step = 0.02;
  std::vector<double> trial;
  std::vector<double> init;
  std::string assessment = "free";
  double q0 = 0.0;
};

void add_invert_flags(CLI::App* app, InvertFlags& f, bool with_ch) {
  if (with_ch) {
    app->add_option("--c", f.c, "Liouville parameter c < 0");
    app->add_option("--h", f.h, "boundary parameter h");
  }
  app->add_option("--n-phases", f.n_phases, "number of phases used (default all)");
  app->add_option("--mode", f.mode, "zero | one | multi");
  app->add_option("--bs-count", f.bs_count, "bound states in multi mode");
  app->add_flag("--drop-c0", f.drop_c0, "omit the n = 0 expansion term");
  app->add_option("--r-min", f.r_min, "GL truncation as a fraction of a");
  app->add_option("--r0", f.r0, "lower end of the smoothness integral");
  app->add_option("--gl-step", f.gl_step, "GL step as a fraction of |c|");
  app->add_option("--trial-lambdas", f.trial, "one-BS trial pair")->expected(2);
  app->add_option("--initial-lambdas", f.init, "multi-BS starting values");
  app->add_option("--assessment", f.assessment, "free | origin");
  app->add_option("--q0", f.q0, "q(0) for origin assessment");
}

InversionConfig to_config(const InvertFlags& f) {
  InversionConfig cfg;
  cfg.c = f.c;
  cfg.h = f.h;
  cfg.n_phases = f.n_phases;
  cfg.mode = parse_bs_mode(f.mode);
  cfg.bs_count = f.bs_count;
  cfg.drop_c0 = f.drop_c0;
  cfg.r_min_fraction = f.r_min;
  cfg.r0 = f.r0;
  cfg.gl_step_fraction = f.gl_step;
  if (f.trial.size() == 2) cfg.trial_lambdas = std::make_pair(f.trial[0], f.trial[1]);
  cfg.initial_lambdas = f.init;
  if (f.assessment == "free") {
    cfg.assessment = AssessmentModel::free_motion;
  } else if (f.assessment == "origin") {
    cfg.assessment = AssessmentModel::origin_value;
  } else {
    throw DomainError(Stage::input, "assessment must be free or origin");
  }
  cfg.assessment_q0 = f.q0;
  cfg.validate();
  return cfg;
}

RadialPotential named_potential(const std::string& name, double a, double value, double depth,
                                double alpha, double radius, double diffuseness) {
  if (name == "constant") return RadialPotential::constant(value, a);
  if (name == "gauss") return RadialPotential::gauss(depth, alpha, a);
  if (name == "woods-saxon") return RadialPotential::woods_saxon(depth, radius, diffuseness, a);
  throw DomainError(Stage::input, "unknown potential '" + name + "'");
}

void print_scenario(const ScenarioRun& run, const Reconstruction& rec, std::ostream& out) {
  const auto& exp = rec.report.expansion;
  char buf[160];
  out << "[" << run.label << "]\n";
  std::snprintf(buf, sizeof buf, "k=%.10g a=%.10g c=%.10g h=%.10g mode=%s phases=%d\n",
                run.phases.k, run.phases.a, run.cfg.c, run.cfg.h, to_string(run.cfg.mode),
                run.phases.size());
  out << buf;
  for (std::size_t i = 0; i < exp.bound_terms.size(); ++i) {
    const auto& b = exp.bound_terms[i];
    std::snprintf(buf, sizeof buf, "bound_state.%zu sqrt_neg_lambda=%.8g lambda=%.8g weight=%.8g\n",
                  i, static_cast<double>(b.sqrt_neg_lambda), b.lambda(), b.weight());
    out << buf;
  }
  std::snprintf(buf, sizeof buf, "smoothness=%.6g f0_plus_h=%.3g gl_residual=%.3g\n",
                rec.report.smoothness, rec.report.f0_plus_h, rec.report.gl_residual);
  out << buf;
  if (run.has_reference) {
    std::snprintf(buf, sizeof buf, "max_deviation[%.3g,%.3g]=%.6g (reference %.6g)\n", run.ref_lo,
                  run.ref_hi, max_deviation(rec.q, run.reference, run.ref_lo, run.ref_hi),
                  run.reference);
    out << buf;
  } else {
    const auto m = global_minimum(rec.q, std::max(run.cfg.r0, rec.q.grid.front()), run.phases.a);
    const double scale = run.energy_scale;
    std::snprintf(buf, sizeof buf, "minimum r=%.4g V=%.6g%s%s\n", m.r, scale * m.value,
                  run.energy_unit.empty() ? "" : " ", run.energy_unit.c_str());
    out << buf;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fixed-energy inverse scattering", "fixinv"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  // forward
  auto* fwd = app.add_subcommand("forward", "phase shifts of a named potential");
  std::string pot_name = "constant", fwd_out;
  double fa = 2.0, fk = 1.0, value = 1.2, depth = -4.0, alpha = 5.0, radius = 0.5, diff = 0.1,
         tol = 1e-10;
  int l_max = 10;
  bool analytic = false;
  fwd->add_option("--potential", pot_name, "constant | gauss | woods-saxon");
  fwd->add_option("--a", fa, "cut-off radius");
  fwd->add_option("--k", fk, "wavenumber");
  fwd->add_option("--l-max", l_max, "largest partial wave");
  fwd->add_option("--value", value, "constant potential value");
  fwd->add_option("--depth", depth, "gauss / woods-saxon depth");
  fwd->add_option("--alpha", alpha, "gauss exponent");
  fwd->add_option("--radius", radius, "woods-saxon radius");
  fwd->add_option("--diffuseness", diff, "woods-saxon diffuseness");
  fwd->add_option("--tol", tol, "ODE tolerance");
  fwd->add_flag("--analytic", analytic, "closed form for the constant potential");
  fwd->add_option("-o,--out", fwd_out, "phase file (default stdout)");

  // invert
  auto* inv = app.add_subcommand("invert", "reconstruct q(r) from a phase file");
  std::string phase_path, csv_path, report_path;
  InvertFlags iflags;
  inv->add_option("phases", phase_path, "phase file")->required();
  add_invert_flags(inv, iflags, true);
  inv->add_option("--csv", csv_path, "q(r) CSV (default stdout)");
  inv->add_option("--report", report_path, "report file");

  // assess
  auto* asx = app.add_subcommand("assess", "auxiliary bound states of the exponential well");
  double kappa_a = 1.0, ac = -1.0, ah = 0.0;
  asx->add_option("--kappa-a", kappa_a, "kappa * a")->required();
  asx->add_option("--c", ac, "Liouville parameter c < 0");
  asx->add_option("--h", ah, "boundary parameter h");

  // tune
  auto* tun = app.add_subcommand("tune", "grid search over (c, h) by smoothness");
  std::string tune_path, grid_c = "-1.5:-0.3:5", grid_h = "-0.5:0.5:5";
  int jobs = 1;
  InvertFlags tflags;
  tun->add_option("phases", tune_path, "phase file")->required();
  tun->add_option("--grid-c", grid_c, "lo:hi:n or comma list");
  tun->add_option("--grid-h", grid_h, "lo:hi:n or comma list");
  tun->add_option("--jobs", jobs, "worker threads");
  add_invert_flags(tun, tflags, false);

  // reproduce
  auto* rep = app.add_subcommand("reproduce", "pinned reference runs");
  std::string scenario;
  rep->add_option("scenario", scenario, "scenario name")
      ->required()
      ->check(CLI::IsMember(scenario_names()));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*fwd) {
      const auto pot = named_potential(pot_name, fa, value, depth, alpha, radius, diff);
      PhaseShiftSet phases;
      if (analytic) {
        if (pot.kind() != RadialPotential::Kind::constant) {
          throw DomainError(Stage::input, "--analytic applies to the constant potential only");
        }
        phases = constant_well_phases(value, fa, fk, l_max);
      } else {
        phases = solve_phase_shifts(pot, fk, l_max, {tol, 1e-6});
      }
      if (fwd_out.empty()) {
        out << format_phase_file(phases);
      } else {
        write_phase_file(fwd_out, phases);
      }
    } else if (*inv) {
      const auto phases = parse_phase_file(phase_path);
      const auto cfg = to_config(iflags);
      const auto rec = reconstruct(phases, cfg);
      const auto csv = format_curve_csv(rec.q);
      const auto report = format_report(rec, cfg);
      if (csv_path.empty()) {
        out << csv;
      } else {
        write_text(csv_path, csv);
      }
      if (report_path.empty()) {
        if (!csv_path.empty()) out << report;
      } else {
        write_text(report_path, report);
      }
    } else if (*asx) {
      out << format_bound_states(assess(kappa_a, ac, ah), kappa_a, ac, ah);
    } else if (*tun) {
      const auto phases = parse_phase_file(tune_path);
      auto base = to_config(tflags);
      TuneGrid grid;
      grid.c_values = parse_range(grid_c, "--grid-c");
      grid.h_values = parse_range(grid_h, "--grid-h");
      grid.r0 = base.r0;
      if (jobs < 1) throw DomainError(Stage::input, "--jobs must be >= 1");
      out << format_tune(grid_search(phases, grid, base, jobs));
    } else if (*rep) {
      for (const auto& run : scenario_runs(scenario)) {
        print_scenario(run, reconstruct(run.phases, run.cfg), out);
      }
    }
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    if (!e.diagnostics().empty()) err << "  " << e.diagnostics() << "\n";
    return 3;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run(args, out, err);
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace fixinv
