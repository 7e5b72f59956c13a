#include "fixinv/moment_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fixinv/error.hpp"

namespace fixinv {

namespace {

Extended half_int(int l) { return Extended(l) + Extended(1) / 2; }

// Column of the moment system for a bound term with exponent beta.
Extended bound_entry(int l, double c, const Extended& beta) {
  return Extended(-c) / (Extended(c) * beta + half_int(l));
}

Extended decay_entry(int l, double c, int n) {
  return Extended(-c) / (Extended(-c) * n + half_int(l));
}

void check_mu(const MomentSet& mu, int needed, const char* who) {
  if (!(mu.c < 0.0)) throw DomainError(Stage::moment_solver, "c must be negative");
  if (mu.size() < needed) {
    std::ostringstream os;
    os << who << ": needs at least " << needed << " moments, got " << mu.size();
    throw DomainError(Stage::moment_solver, os.str());
  }
}

Extended max_abs(const std::vector<Extended>& v) {
  Extended m = 0;
  for (const auto& e : v) m = std::max(m, Extended(abs(e)));
  return m;
}

double system_residual(const SpectralExpansion& e, const MomentSet& mu, int count) {
  const auto f = forward_moments(e, count);
  Extended r = 0;
  for (int l = 0; l < count; ++l) {
    r = std::max(r, Extended(abs(f[static_cast<std::size_t>(l)] - mu.mu[static_cast<std::size_t>(l)])));
  }
  return static_cast<double>(r);
}

// One-bound-term Cauchy solve at fixed beta over moments 0..N+1.
SpectralExpansion one_bs_at(const MomentSet& mu, const Extended& beta) {
  const int dim = mu.size();
  const int N = dim - 2;
  CauchyNodes nodes;
  for (int l = 0; l < dim; ++l) nodes.x.push_back(half_int(l));
  nodes.y.push_back(Extended(mu.c) * beta);
  for (int n = 0; n <= N; ++n) nodes.y.push_back(Extended(-mu.c) * n);
  const ExtMatrix inv = cauchy_inverse(nodes);
  ExtVector rhs(dim);
  for (int l = 0; l < dim; ++l) rhs(l) = mu.mu[static_cast<std::size_t>(l)] / Extended(-mu.c);
  const ExtVector sol = inv * rhs;
  SpectralExpansion e;
  e.c = mu.c;
  e.h = mu.h;
  e.bound_terms.push_back({beta, sol(0)});
  for (int n = 0; n <= N; ++n) e.coeffs.push_back(sol(n + 1));
  return e;
}

struct Projected {
  SpectralExpansion exp;
  std::vector<Extended> tail;  // residuals of the moments not used by the linear solve
};

// For fixed betas, solve constraint + moments 0..N+B-1 for the weights and
// c_n, then evaluate the remaining B moment residuals.
Projected project(const MomentSet& mu, const std::vector<Extended>& betas, int N, bool literal) {
  const int B = static_cast<int>(betas.size());
  const int n_un = B + N + 1;
  ExtMatrix a = ExtMatrix::Zero(n_un, n_un);
  ExtVector rhs(n_un);
  for (int j = 0; j < B; ++j) a(0, j) = literal ? Extended(2) : Extended(1);
  for (int n = 0; n <= N; ++n) a(0, B + n) = 1;
  rhs(0) = -Extended(mu.h);
  for (int r = 1; r < n_un; ++r) {
    const int l = r - 1;
    for (int j = 0; j < B; ++j) a(r, j) = bound_entry(l, mu.c, betas[static_cast<std::size_t>(j)]);
    for (int n = 0; n <= N; ++n) a(r, B + n) = decay_entry(l, mu.c, n);
    rhs(r) = mu.mu[static_cast<std::size_t>(l)];
  }
  Eigen::FullPivLU<ExtMatrix> lu(a);
  if (!lu.isInvertible()) {
    throw NumericalError(Stage::moment_solver, Failure::degenerate_nodes,
                         "bound-state linear subsystem is singular");
  }
  const ExtVector x = lu.solve(rhs);
  Projected p;
  p.exp.c = mu.c;
  p.exp.h = mu.h;
  for (int j = 0; j < B; ++j) p.exp.bound_terms.push_back({betas[static_cast<std::size_t>(j)], x(j)});
  for (int n = 0; n <= N; ++n) p.exp.coeffs.push_back(x(B + n));
  for (int l = N + B; l < N + 2 * B; ++l) {
    Extended s = 0;
    for (int j = 0; j < B; ++j) s += x(j) * bound_entry(l, mu.c, betas[static_cast<std::size_t>(j)]);
    for (int n = 0; n <= N; ++n) s += x(B + n) * decay_entry(l, mu.c, n);
    p.tail.push_back(s - mu.mu[static_cast<std::size_t>(l)]);
  }
  return p;
}

}  // namespace

double BoundTerm::lambda() const {
  const double b = static_cast<double>(sqrt_neg_lambda);
  return -b * b;
}

double BoundTerm::weight() const { return 2.0 * static_cast<double>(half_weight); }

Extended SpectralExpansion::f0() const {
  Extended s = 0;
  for (const auto& t : bound_terms) s += t.half_weight;
  for (const auto& cn : coeffs) s += cn;
  return s;
}

SpectralExpansion solve_zero_bs(const MomentSet& mu, bool drop_c0) {
  check_mu(mu, 1, "solve_zero_bs");
  const int dim = mu.size();
  // with drop_c0 the columns are n = 1..dim instead of 0..dim-1
  const int first = drop_c0 ? 1 : 0;
  CauchyNodes nodes;
  for (int l = 0; l < dim; ++l) nodes.x.push_back(half_int(l));
  for (int n = first; n < first + dim; ++n) nodes.y.push_back(Extended(-mu.c) * n);
  const ExtMatrix inv = cauchy_inverse(nodes);
  ExtVector rhs(dim);
  for (int l = 0; l < dim; ++l) rhs(l) = mu.mu[static_cast<std::size_t>(l)] / Extended(-mu.c);
  const ExtVector sol = inv * rhs;
  SpectralExpansion e;
  e.c = mu.c;
  e.h = mu.h;
  if (drop_c0) e.coeffs.push_back(0);
  for (int i = 0; i < dim; ++i) e.coeffs.push_back(sol(i));
  e.moment_residual = system_residual(e, mu, dim);
  return e;
}

std::pair<double, double> default_trial_lambdas(double c) {
  return {-1.0 / (c * c), -4.0 / (c * c)};
}

SpectralExpansion solve_one_bs(const MomentSet& mu, std::pair<double, double> trial) {
  check_mu(mu, 2, "solve_one_bs");
  if (!(trial.first < 0.0) || !(trial.second < 0.0) || trial.first == trial.second) {
    throw DomainError(Stage::moment_solver, "trial lambdas must be distinct and negative");
  }
  const Extended b1 = sqrt(Extended(-trial.first));
  const Extended b2 = sqrt(Extended(-trial.second));
  const Extended s1 = one_bs_at(mu, b1).f0();
  const Extended s2 = one_bs_at(mu, b2).f0();
  const Extended h(mu.h);
  if (s1 == s2 || abs(s2 - s1) < Extended(1e-30) * (abs(s1) + abs(s2))) {
    std::ostringstream os;
    os << "S1=" << static_cast<double>(s1) << " S2=" << static_cast<double>(s2);
    throw NumericalError(Stage::moment_solver, Failure::indeterminate,
                         "sum is independent of sqrt(-lambda)", os.str());
  }
  // S is affine in sqrt(-lambda); pick the root of S + h
  const Extended beta = ((s2 + h) * b1 - (s1 + h) * b2) / (s2 - s1);
  SpectralExpansion e;
  try {
    e = one_bs_at(mu, beta);
  } catch (const NumericalError& err) {
    std::ostringstream os;
    os << "sqrt(-lambda)=" << static_cast<double>(beta) << "; retry with perturbed trial lambdas";
    throw NumericalError(Stage::moment_solver, Failure::degenerate_nodes,
                         "bound-state node collides with a decay node", os.str());
  }
  e.moment_residual = system_residual(e, mu, mu.size());
  return e;
}

SpectralExpansion solve_multi_bs(const MomentSet& mu, const std::vector<double>& init,
                                 const MultiBsOptions& opts) {
  const int B = static_cast<int>(init.size());
  if (B < 1) throw DomainError(Stage::moment_solver, "solve_multi_bs needs at least one lambda");
  check_mu(mu, 2 * B + 1, "solve_multi_bs");
  for (double l0 : init) {
    if (!(l0 < 0.0)) throw DomainError(Stage::moment_solver, "initial lambdas must be negative");
  }
  const int N = mu.size() - 2 * B;
  const Extended scale = std::max(Extended(1), max_abs(mu.mu));
  const Extended floor_beta(1e-8);

  std::vector<Extended> beta;
  for (double l0 : init) beta.push_back(sqrt(Extended(-l0)));

  auto norm = [](const std::vector<Extended>& r) { return max_abs(r); };
  auto coalescing = [&](const std::vector<Extended>& b) {
    for (int i = 0; i < B; ++i) {
      for (int j = i + 1; j < B; ++j) {
        const Extended li = b[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
        const Extended lj = b[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(j)];
        if (abs(li - lj) < Extended(1e-6)) return true;
      }
    }
    return false;
  };
  if (coalescing(beta)) {
    throw NumericalError(Stage::moment_solver, Failure::coalescing,
                         "initial lambdas coincide; retry with B-1 bound states");
  }

  Projected cur = project(mu, beta, N, opts.literal_constraint);
  Extended res = norm(cur.tail);
  int it = 0;
  for (; it < opts.max_iter; ++it) {
    if (res <= Extended(1e-28) * scale) break;
    ExtMatrix jac(B, B);
    for (int j = 0; j < B; ++j) {
      const Extended step = Extended(1e-12) * std::max(Extended(1), beta[static_cast<std::size_t>(j)]);
      auto bp = beta, bm = beta;
      bp[static_cast<std::size_t>(j)] += step;
      bm[static_cast<std::size_t>(j)] -= step;
      const auto rp = project(mu, bp, N, opts.literal_constraint).tail;
      const auto rm = project(mu, bm, N, opts.literal_constraint).tail;
      for (int i = 0; i < B; ++i) {
        jac(i, j) = (rp[static_cast<std::size_t>(i)] - rm[static_cast<std::size_t>(i)]) / (2 * step);
      }
    }
    ExtVector r(B);
    for (int i = 0; i < B; ++i) r(i) = cur.tail[static_cast<std::size_t>(i)];
    Eigen::FullPivLU<ExtMatrix> lu(jac);
    if (!lu.isInvertible()) break;
    const ExtVector d = lu.solve(r);
    Extended t = 1;
    bool improved = false;
    while (t > Extended(1e-6)) {
      std::vector<Extended> trial = beta;
      for (int i = 0; i < B; ++i) {
        // projection keeps every lambda strictly negative
        trial[static_cast<std::size_t>(i)] =
            std::max(floor_beta, Extended(beta[static_cast<std::size_t>(i)] - t * d(i)));
      }
      if (!coalescing(trial)) {
        try {
          Projected p = project(mu, trial, N, opts.literal_constraint);
          const Extended rn = norm(p.tail);
          if (rn < res) {
            beta = std::move(trial);
            cur = std::move(p);
            res = rn;
            improved = true;
            break;
          }
        } catch (const NumericalError&) {
        }
      }
      t /= 2;
    }
    if (!improved) break;
  }
  if (coalescing(beta)) {
    throw NumericalError(Stage::moment_solver, Failure::coalescing,
                         "bound states coalesced; retry with B-1 bound states");
  }
  if (!(res <= Extended(opts.tol) * scale)) {
    std::ostringstream os;
    os << "best residual " << static_cast<double>(res) << " after " << it << " iterations; lambdas";
    for (const auto& b : beta) os << ' ' << static_cast<double>(-b * b);
    throw NumericalError(Stage::moment_solver, Failure::non_convergence,
                         "nonlinear moment system did not converge", os.str());
  }
  SpectralExpansion e = std::move(cur.exp);
  std::sort(e.bound_terms.begin(), e.bound_terms.end(),
            [](const BoundTerm& a, const BoundTerm& b) { return a.sqrt_neg_lambda > b.sqrt_neg_lambda; });
  e.moment_residual = system_residual(e, mu, mu.size());
  return e;
}

Extended evaluate_F(const SpectralExpansion& e, const Extended& x) {
  Extended s = 0;
  for (const auto& t : e.bound_terms) s += t.half_weight * exp(t.sqrt_neg_lambda * x);
  for (std::size_t n = 0; n < e.coeffs.size(); ++n) {
    s += e.coeffs[n] * exp(-Extended(static_cast<int>(n)) * x);
  }
  return s;
}

double evaluate_F(const SpectralExpansion& e, double x) {
  return static_cast<double>(evaluate_F(e, Extended(x)));
}

std::vector<Extended> forward_moments(const SpectralExpansion& e, int count) {
  std::vector<Extended> out;
  for (int l = 0; l < count; ++l) {
    Extended s = 0;
    for (const auto& t : e.bound_terms) s += t.half_weight * bound_entry(l, e.c, t.sqrt_neg_lambda);
    for (std::size_t n = 0; n < e.coeffs.size(); ++n) {
      s += e.coeffs[n] * decay_entry(l, e.c, static_cast<int>(n));
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace fixinv
