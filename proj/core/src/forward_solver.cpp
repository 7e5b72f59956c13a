#include "fixinv/forward_solver.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include <boost/math/interpolators/pchip.hpp>
#include <boost/numeric/odeint.hpp>

#include "fixinv/error.hpp"
#include "fixinv/specfun.hpp"

namespace fixinv {

struct RadialPotential::Table {
  boost::math::interpolators::pchip<std::vector<double>> spline;
  double r_lo, r_hi, q_lo;
};

RadialPotential RadialPotential::constant(double value, double a) {
  if (!(a > 0.0) || !std::isfinite(value)) {
    throw DomainError(Stage::forward, "constant potential needs a > 0 and finite value");
  }
  RadialPotential p;
  p.kind_ = Kind::constant;
  p.a_ = a;
  p.params_ = {{"value", value}};
  return p;
}

RadialPotential RadialPotential::gauss(double depth, double alpha, double a) {
  if (!(a > 0.0) || !(alpha >= 0.0)) {
    throw DomainError(Stage::forward, "gauss potential needs a > 0 and alpha >= 0");
  }
  RadialPotential p;
  p.kind_ = Kind::gauss;
  p.a_ = a;
  p.params_ = {{"depth", depth}, {"alpha", alpha}};
  return p;
}

RadialPotential RadialPotential::woods_saxon(double depth, double radius,
                                             double diffuseness, double a) {
  if (!(a > 0.0) || !(diffuseness > 0.0)) {
    throw DomainError(Stage::forward, "woods_saxon potential needs a > 0 and diffuseness > 0");
  }
  RadialPotential p;
  p.kind_ = Kind::woods_saxon;
  p.a_ = a;
  p.params_ = {{"depth", depth}, {"radius", radius}, {"diffuseness", diffuseness}};
  return p;
}

RadialPotential RadialPotential::tabulated(std::vector<double> r, std::vector<double> q,
                                           double a) {
  if (!(a > 0.0) || r.size() != q.size() || r.size() < 4) {
    throw DomainError(Stage::forward, "tabulated potential needs >= 4 (r, q) pairs and a > 0");
  }
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!std::isfinite(r[i]) || !std::isfinite(q[i]) || r[i] < 0.0 ||
        (i > 0 && !(r[i] > r[i - 1]))) {
      throw DomainError(Stage::forward, "tabulated potential: r must be increasing, values finite");
    }
  }
  // r q(r) integrable near the origin: reject a visibly 1/r^2-type head
  if (r.front() > 0.0 && r.size() > 1) {
    const double r0 = r[0], r1 = r[1];
    if (std::abs(q[0]) > 0.0 && std::abs(q[1]) > 0.0) {
      const double slope = std::log(std::abs(q[0]) / std::abs(q[1])) / std::log(r1 / r0);
      if (slope >= 2.0 && r0 < 1e-3 * a) {
        throw DomainError(Stage::forward, "tabulated potential: r*q(r) not integrable at the origin");
      }
    }
  }
  RadialPotential p;
  p.kind_ = Kind::tabulated;
  p.a_ = a;
  const double lo = r.front(), hi = r.back(), qlo = q.front();
  p.table_ = std::make_shared<const Table>(
      Table{boost::math::interpolators::pchip<std::vector<double>>(std::move(r), std::move(q)),
            lo, hi, qlo});
  return p;
}

double RadialPotential::operator()(double r) const {
  if (r >= a_) return 0.0;
  switch (kind_) {
    case Kind::constant:
      return params_.at("value");
    case Kind::gauss:
      return params_.at("depth") * std::exp(-params_.at("alpha") * r * r);
    case Kind::woods_saxon:
      return params_.at("depth") /
             (1.0 + std::exp((r - params_.at("radius")) / params_.at("diffuseness")));
    case Kind::tabulated: {
      if (r <= table_->r_lo) return table_->q_lo;
      if (r >= table_->r_hi) return 0.0;
      return table_->spline(r);
    }
  }
  return 0.0;
}

namespace {

namespace odeint = boost::numeric::odeint;
using State = std::array<double, 2>;

double match_tan(double u, double du, double k, double a, double J, double dJ, double Y,
                 double dY) {
  const double num = u * (k * dJ + J / (2.0 * a)) - du * J;
  const double den = u * (k * dY + Y / (2.0 * a)) - du * Y;
  return num / den;
}

void normalise(State& y) {
  const double m = std::max(std::abs(y[0]), std::abs(y[1]));
  if (m > 0.0 && std::isfinite(m)) {
    y[0] /= m;
    y[1] /= m;
  }
}

// Returns (phi, dphi/dr) at r = a, arbitrary normalisation.
State integrate_wave(const RadialPotential& pot, double k, int l, const ForwardOptions& o) {
  const double a = pot.a();
  const double ll = l * (l + 1.0);
  const double k2 = k * k;
  auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(o.ode_tol, o.ode_tol);

  // log stage: y = (phi, r dphi/dr), s = ln r
  const double r_switch = 0.1 * a;
  const double s0 = std::log(o.start_fraction * a), s1 = std::log(r_switch);
  State y{1.0, l + 1.0};
  auto log_rhs = [&](const State& v, State& dv, double s) {
    const double r = std::exp(s);
    dv[0] = v[1];
    dv[1] = v[1] + (ll + r * r * (pot(r) - k2)) * v[0];
  };
  const int chunks = 40;
  const double ds = (s1 - s0) / chunks;
  for (int i = 0; i < chunks; ++i) {
    odeint::integrate_adaptive(stepper, log_rhs, y, s0 + i * ds, s0 + (i + 1) * ds, ds / 10);
    normalise(y);
  }
  State z{y[0], y[1] / r_switch};
  normalise(z);
  auto lin_rhs = [&](const State& v, State& dv, double r) {
    dv[0] = v[1];
    dv[1] = (ll / (r * r) + pot(r) - k2) * v[0];
  };
  const int lin_chunks = 10;
  const double dr = (a - r_switch) / lin_chunks;
  for (int i = 0; i < lin_chunks; ++i) {
    // land exactly on a so the clamp at r >= a is never sampled
    const double r_end = i + 1 == lin_chunks ? a : r_switch + (i + 1) * dr;
    odeint::integrate_adaptive(stepper, lin_rhs, z, r_switch + i * dr, r_end, dr / 10);
    normalise(z);
  }
  return z;
}

void check_phase_args(double k, double a, int l_max) {
  if (!(k > 0.0) || !(a > 0.0) || l_max < 0 || l_max > 40 || k * a > specfun::kMaxArg) {
    throw DomainError(Stage::forward, "need k > 0, a > 0, 0 <= l_max <= 40, ka <= 50");
  }
}

}  // namespace

PhaseShiftSet solve_phase_shifts(const RadialPotential& pot, double k, int l_max,
                                 const ForwardOptions& opts) {
  const double a = pot.a();
  check_phase_args(k, a, l_max);
  if (!(opts.ode_tol >= 1e-12 && opts.ode_tol <= 1e-6)) {
    throw DomainError(Stage::forward, "ode_tol must lie in [1e-12, 1e-6]");
  }
  if (!(opts.start_fraction > 0.0 && opts.start_fraction < 0.1)) {
    throw DomainError(Stage::forward, "start_fraction must lie in (0, 0.1)");
  }
  const auto hb = specfun::half_integer_bessel<double>(l_max, k * a);
  PhaseShiftSet out;
  out.k = k;
  out.a = a;
  for (int l = 0; l <= l_max; ++l) {
    State z;
    try {
      z = integrate_wave(pot, k, l, opts);
    } catch (const std::exception& e) {
      std::ostringstream os;
      os << "l=" << l << " tol=" << opts.ode_tol << ": " << e.what();
      throw NumericalError(Stage::forward, Failure::integration,
                           "radial integration did not converge", os.str());
    }
    if (!std::isfinite(z[0]) || !std::isfinite(z[1])) {
      std::ostringstream os;
      os << "l=" << l << " tol=" << opts.ode_tol;
      throw NumericalError(Stage::forward, Failure::integration,
                           "radial integration produced non-finite values", os.str());
    }
    const auto i = static_cast<std::size_t>(l);
    const double t = match_tan(z[0], z[1], k, a, hb.J[i], hb.dJ[i], hb.Y[i], hb.dY[i]);
    out.deltas.push_back(std::atan(t));
  }
  return out;
}

std::vector<Extended> constant_well_tan(double C, double a, double k, int l_max) {
  check_phase_args(k, a, l_max);
  const Extended K(k), A(a), Cq(C);
  const Extended k2 = K * K;
  const auto hb = specfun::half_integer_bessel<Extended>(l_max, K * A);
  // interior u = r f_l(kappa r) and u' at r = a
  std::vector<Extended> u(static_cast<std::size_t>(l_max + 1)), du(u.size());
  if (Cq < k2) {
    const Extended kap = sqrt(k2 - Cq);
    const Extended x = kap * A;
    const auto t = specfun::spherical_bessel<Extended>(l_max, x);
    for (int l = 0; l <= l_max; ++l) {
      u[static_cast<std::size_t>(l)] = A * t.jl(l);
      du[static_cast<std::size_t>(l)] = t.jl(l) + x * t.djl(l, x);
    }
  } else if (Cq > k2) {
    const Extended kap = sqrt(Cq - k2);
    const Extended x = kap * A;
    const auto in = specfun::modified_spherical_i<Extended>(l_max, x);
    for (int l = 0; l <= l_max; ++l) {
      const auto i = static_cast<std::size_t>(l);
      const Extended di = in[i + 1] + Extended(l) / x * in[i];
      u[i] = A * in[i];
      du[i] = in[i] + x * di;
    }
  } else {
    for (int l = 0; l <= l_max; ++l) {
      u[static_cast<std::size_t>(l)] = pow(A, l + 1);
      du[static_cast<std::size_t>(l)] = Extended(l + 1) * pow(A, l);
    }
  }
  std::vector<Extended> out;
  for (int l = 0; l <= l_max; ++l) {
    const auto i = static_cast<std::size_t>(l);
    const Extended num = u[i] * (K * hb.dJ[i] + hb.J[i] / (2 * A)) - du[i] * hb.J[i];
    const Extended den = u[i] * (K * hb.dY[i] + hb.Y[i] / (2 * A)) - du[i] * hb.Y[i];
    out.push_back(num / den);
  }
  return out;
}

double constant_well_phase_shift(double C, double a, double k, int l) {
  if (l < 0) throw DomainError(Stage::forward, "l must be non-negative");
  const auto t = constant_well_tan(C, a, k, l);
  return std::atan(static_cast<double>(t.back()));
}

PhaseShiftSet constant_well_phases(double C, double a, double k, int l_max) {
  PhaseShiftSet out;
  out.k = k;
  out.a = a;
  out.exact_tan = constant_well_tan(C, a, k, l_max);
  for (const auto& t : out.exact_tan) out.deltas.push_back(std::atan(static_cast<double>(t)));
  return out;
}

}  // namespace fixinv
