#include "fixinv/gl_reconstruction.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Dense>

#include "fixinv/bound_states.hpp"
#include "fixinv/error.hpp"
#include "fixinv/tuning.hpp"

namespace fixinv {

GLGrid GLGrid::uniform(double x_max, double step) {
  if (!(x_max > 0.0) || !(step > 0.0) || !std::isfinite(x_max)) {
    throw DomainError(Stage::gl, "GL grid needs x_max > 0 and step > 0");
  }
  const int m = static_cast<int>(std::ceil(x_max / step - 1e-9));
  GLGrid g;
  g.x_max = x_max;
  g.step = x_max / m;
  for (int j = 0; j <= m; ++j) g.nodes.push_back(j * g.step);
  return g;
}

double kernel_F2(const SpectralExpansion& exp, double x, double t) {
  if (!(x >= 0.0) || !(t >= 0.0)) throw DomainError(Stage::gl, "kernel_F2 needs x, t >= 0");
  const Extended X(x), T(t);
  return static_cast<double>((evaluate_F(exp, X + T) + evaluate_F(exp, abs(X - T))) / 2);
}

GLGrid solve_gl(const SpectralExpansion& exp, GLGrid grid) {
  const int M = grid.intervals();
  if (M < 1) throw DomainError(Stage::gl, "GL grid has no intervals");
  const double dx = grid.step;
  // F is only needed at multiples of the step (Toeplitz plus Hankel)
  std::vector<double> F(static_cast<std::size_t>(2 * M + 1));
  for (int m = 0; m <= 2 * M; ++m) {
    F[static_cast<std::size_t>(m)] = static_cast<double>(evaluate_F(exp, Extended(m) * Extended(dx)));
  }
  auto F2 = [&](int s, int i) {
    return 0.5 * (F[static_cast<std::size_t>(s + i)] + F[static_cast<std::size_t>(std::abs(s - i))]);
  };
  grid.K_diag.assign(static_cast<std::size_t>(M + 1), 0.0);
  grid.max_residual = 0.0;
  grid.K_diag[0] = -F[0];
  for (int j = 1; j <= M; ++j) {
    const int n = j + 1;
    Eigen::MatrixXd a(n, n);
    Eigen::VectorXd rhs(n);
    for (int i = 0; i < n; ++i) {
      rhs(i) = -F2(j, i);
      for (int s = 0; s < n; ++s) {
        const double w = (s == 0 || s == j) ? 0.5 * dx : dx;
        a(i, s) = (i == s ? 1.0 : 0.0) + w * F2(s, i);
      }
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
    if (!(lu.rcond() > std::numeric_limits<double>::epsilon())) {
      std::ostringstream os;
      os << "row x=" << grid.nodes[static_cast<std::size_t>(j)] << " rcond=" << lu.rcond();
      throw NumericalError(Stage::gl, Failure::non_unique,
                           "discretised Gel'fand-Levitan operator is singular", os.str());
    }
    const Eigen::VectorXd k = lu.solve(rhs);
    const double res = (a * k - rhs).lpNorm<Eigen::Infinity>();
    grid.max_residual = std::max(grid.max_residual, res);
    grid.K_diag[static_cast<std::size_t>(j)] = k(j);
  }
  return grid;
}

PotentialCurve potential_from_K(const GLGrid& grid) {
  const int M = grid.intervals();
  if (M < 5 || grid.K_diag.size() != grid.nodes.size()) {
    throw NumericalError(Stage::gl, Failure::grid_too_small,
                         "need at least 5 GL intervals with K populated");
  }
  const auto& k = grid.K_diag;
  const double h12 = 12.0 * grid.step;
  auto K = [&](int i) { return k[static_cast<std::size_t>(i)]; };
  PotentialCurve Q;
  Q.grid = grid.nodes;
  Q.values.resize(grid.nodes.size());
  for (int j = 0; j <= M; ++j) {
    double d;
    if (j >= 2 && j <= M - 2) {
      d = (-K(j + 2) + 8.0 * K(j + 1) - 8.0 * K(j - 1) + K(j - 2)) / h12;
    } else if (j == 0) {
      d = (-25.0 * K(0) + 48.0 * K(1) - 36.0 * K(2) + 16.0 * K(3) - 3.0 * K(4)) / h12;
    } else if (j == 1) {
      d = (-3.0 * K(0) - 10.0 * K(1) + 18.0 * K(2) - 6.0 * K(3) + K(4)) / h12;
    } else if (j == M - 1) {
      d = (3.0 * K(M) + 10.0 * K(M - 1) - 18.0 * K(M - 2) + 6.0 * K(M - 3) - K(M - 4)) / h12;
    } else {
      d = (25.0 * K(M) - 48.0 * K(M - 1) + 36.0 * K(M - 2) - 16.0 * K(M - 3) + 3.0 * K(M - 4)) / h12;
    }
    Q.values[static_cast<std::size_t>(j)] = 2.0 * d;
  }
  return Q;
}

SpectralExpansion solve_expansion(const MomentSet& mu, const PhaseShiftSet& phases,
                                  const InversionConfig& cfg, std::vector<double>* assessed) {
  switch (cfg.mode) {
    case BsMode::zero:
      return solve_zero_bs(mu, cfg.drop_c0);
    case BsMode::one:
      return solve_one_bs(mu, cfg.trial_lambdas.value_or(default_trial_lambdas(cfg.c)));
    case BsMode::multi: {
      std::vector<double> init = cfg.initial_lambdas;
      if (init.empty()) {
        const double ka = assessment_kappa_a(phases.k, phases.a, cfg.assessment, cfg.assessment_q0);
        const auto set = assess(ka, cfg.c, cfg.h);
        if (set.count < cfg.bs_count) {
          std::ostringstream os;
          os << "assessment found " << set.count << " bound states, multi mode asked for "
             << cfg.bs_count;
          throw NumericalError(Stage::bound_states, Failure::search_failed,
                               "not enough assessed bound states", os.str());
        }
        // deepest states first
        init.assign(set.lambdas.begin(), set.lambdas.begin() + cfg.bs_count);
      }
      if (assessed) *assessed = init;
      return solve_multi_bs(mu, init, cfg.multi);
    }
  }
  throw DomainError(Stage::input, "unknown mode");
}

Reconstruction reconstruct(const PhaseShiftSet& phases, const InversionConfig& cfg) {
  cfg.validate();
  TransformParams tp{phases.a, cfg.c, phases.k};
  tp.validate();
  Reconstruction out;
  auto& rep = out.report;
  rep.mode = cfg.mode;
  const int n = cfg.n_phases < 0 ? phases.size() : cfg.n_phases;
  if (n > phases.size()) {
    throw DomainError(Stage::input, "n_phases exceeds the number of phase shifts supplied");
  }
  rep.moments = compute_moments(phases, cfg.c, cfg.h, n);
  rep.expansion = solve_expansion(rep.moments, phases, cfg, &rep.assessed_lambdas);
  rep.f0_plus_h = static_cast<double>(rep.expansion.f0() + Extended(cfg.h));

  const double abs_c = -cfg.c;
  rep.x_max = abs_c * std::log(1.0 / cfg.r_min_fraction);
  GLGrid grid = solve_gl(rep.expansion, GLGrid::uniform(rep.x_max, cfg.gl_step_fraction * abs_c));
  rep.gl_step = grid.step;
  rep.gl_residual = grid.max_residual;
  out.Q = potential_from_K(grid);
  out.Q.meta = {phases.k, phases.a, cfg.c, cfg.h};
  out.q = physical_potential(out.Q, tp);
  out.q.meta.h = cfg.h;
  rep.q_at_a = out.q.values.back();
  const double r_lo = std::max(cfg.r0, out.q.grid.front());
  rep.smoothness = smoothness(out.q, r_lo, phases.a);
  return out;
}

}  // namespace fixinv
