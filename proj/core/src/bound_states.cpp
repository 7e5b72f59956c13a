#include "fixinv/bound_states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fixinv/error.hpp"
#include "fixinv/specfun.hpp"

namespace fixinv {

namespace {

constexpr double kScanStep = 0.05;
constexpr double kJ1FirstZero = 3.8317059702075123;  // first zero of J0'
constexpr double kJ0SecondZero = 5.5200781102863106;

template <class F>
double bisect(F f, double lo, double hi, double flo, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ExpWellParams ExpWellParams::from_kappa_a(double kappa_a, double c, double h) {
  if (!(c < 0.0)) throw DomainError(Stage::bound_states, "c must be negative");
  ExpWellParams p;
  p.kappa_a = kappa_a;
  p.t = -1.0 / c;
  p.s = (kappa_a / c) * (kappa_a / c);
  p.h = h;
  p.validate();
  return p;
}

void ExpWellParams::validate() const {
  if (!(s > 0.0) || !(t > 0.0) || !(kappa_a > 0.0) || !std::isfinite(h)) {
    throw DomainError(Stage::bound_states, "exponential well needs s, t, kappa_a > 0");
  }
  if (std::abs(std::sqrt(s) / t - kappa_a) > 1e-9 * kappa_a) {
    throw DomainError(Stage::bound_states, "inconsistent well parameters: sqrt(s)/t != kappa_a");
  }
}

std::vector<double> bessel_j1_zeros(double x_max) {
  std::vector<double> out;
  auto f = [](double x) { return specfun::bessel_j(1.0, x); };
  double x0 = 0.5, f0 = f(x0);
  for (double x = x0 + kScanStep; x < x_max + kScanStep; x += kScanStep) {
    const double xe = std::min(x, x_max);
    const double fx = f(xe);
    if ((fx < 0.0) != (f0 < 0.0)) out.push_back(bisect(f, x0, xe, f0, 1e-12));
    x0 = xe;
    f0 = fx;
    if (xe >= x_max) break;
  }
  return out;
}

int count_bound_states_h0(double kappa_a, bool* near_boundary) {
  if (!(kappa_a > 0.0) || kappa_a > specfun::kMaxArg) {
    throw DomainError(Stage::bound_states, "kappa_a must lie in (0, 50]");
  }
  const auto zeros = bessel_j1_zeros(kappa_a + 1e-6);
  int count = 1;  // the zero at the origin
  bool near = false;
  for (double z : zeros) {
    if (z < kappa_a) ++count;
    if (std::abs(z - kappa_a) < 1e-9) near = true;
  }
  if (near_boundary) *near_boundary = near;
  return count;
}

BoundStateSet bound_state_positions(const ExpWellParams& p) {
  p.validate();
  const double X = p.kappa_a;
  const double rs = std::sqrt(p.s);
  auto g = [&](double mu) {
    return specfun::bessel_j_prime(mu, X) + p.h / rs * specfun::bessel_j(mu, X);
  };
  const double mu_max = std::min(X + 5.0, specfun::kMaxOrder - 1.0);
  BoundStateSet out;
  double m0 = kScanStep, g0 = g(m0);
  for (double m = m0 + kScanStep; m <= mu_max + 1e-12; m += kScanStep) {
    const double gm = g(m);
    if (gm == 0.0 || (gm < 0.0) != (g0 < 0.0)) {
      const double mu = gm == 0.0 ? m : bisect(g, m0, m, g0, 1e-10);
      const double root = mu * p.t;
      out.lambdas.push_back(-root * root);
    }
    m0 = m;
    g0 = gm;
  }
  // below the first scan point: a root with mu < 0.05 only shows as a sign
  // change between mu = 0 and the first sample
  {
    const double gz = specfun::bessel_j_prime(0.0, X) + p.h / rs * specfun::bessel_j(0.0, X);
    const double g1 = g(kScanStep);
    if (gz != 0.0 && (gz < 0.0) != (g1 < 0.0)) {
      const double mu = bisect(g, 0.0, kScanStep, gz, 1e-10);
      if (mu > 0.0) {
        const double root = mu * p.t;
        out.lambdas.push_back(-root * root);
      }
    }
  }
  std::sort(out.lambdas.begin(), out.lambdas.end());
  out.count = static_cast<int>(out.lambdas.size());
  if (p.h == 0.0) count_bound_states_h0(X, &out.near_boundary);
  return out;
}

double step_height(double lambda0, const ExpWellParams& p) {
  p.validate();
  if (!(lambda0 < 0.0)) throw DomainError(Stage::bound_states, "lambda0 must be negative");
  const double X = p.kappa_a;
  const double rs = std::sqrt(p.s);
  const double root = std::sqrt(-lambda0);
  const double mu = root / p.t;
  const double cond = specfun::bessel_j_prime(mu, X) + p.h / rs * specfun::bessel_j(mu, X);
  if (std::abs(cond) > 1e-8 * (1.0 + std::abs(p.h) / rs)) {
    std::ostringstream os;
    os << "lambda0=" << lambda0 << " residual=" << cond;
    throw DomainError(Stage::bound_states, "step_height: lambda0 is not a bound state (" + os.str() + ")");
  }
  // small orders: shrink the order step so it stays inside nu >= 0
  const double dnu = std::min(1e-4, 0.5 * mu);
  const double j10 = specfun::bessel_j_dnu(mu, X, dnu);
  const double j11 = specfun::bessel_j_prime_dnu(mu, X, dnu);
  const double den = rs * j11 + p.h * j10;
  if (std::abs(den) < 1e-10) {
    std::ostringstream os;
    os << "lambda0=" << lambda0 << " denominator=" << den;
    throw NumericalError(Stage::bound_states, Failure::degenerate_residue,
                         "vanishing residue denominator", os.str());
  }
  return 2.0 * p.t * root * specfun::bessel_j(mu, X) / den;
}

Reducibility reducibility_window(double kappa_a) {
  if (!(kappa_a > 0.0)) throw DomainError(Stage::bound_states, "kappa_a must be positive");
  if (kappa_a < kJ1FirstZero) return Reducibility::already_one;
  if (kappa_a < kJ0SecondZero) return Reducibility::reducible;
  return Reducibility::outside_lemma;
}

const char* to_string(Reducibility r) {
  switch (r) {
    case Reducibility::already_one: return "already_one";
    case Reducibility::reducible: return "reducible";
    case Reducibility::outside_lemma: return "outside_lemma";
  }
  return "unknown";
}

double assessment_kappa_a(double k, double a, AssessmentModel model, double q0) {
  if (!(k > 0.0) || !(a > 0.0)) throw DomainError(Stage::bound_states, "k and a must be positive");
  if (model == AssessmentModel::free_motion) return k * a;
  const double kap2 = k * k - q0;
  if (!(kap2 > 0.0)) {
    throw DomainError(Stage::bound_states, "k^2 - q(0) must be positive for the assessment");
  }
  return std::sqrt(kap2) * a;
}

BoundStateSet assess(double kappa_a, double c, double h) {
  const auto p = ExpWellParams::from_kappa_a(kappa_a, c, h);
  BoundStateSet out = bound_state_positions(p);
  for (double l0 : out.lambdas) out.weights.push_back(step_height(l0, p));
  return out;
}

}  // namespace fixinv
