#include "fixinv/spectral_data.hpp"

#include <cmath>
#include <sstream>

#include "fixinv/error.hpp"
#include "fixinv/specfun.hpp"

namespace fixinv {

namespace {

void check_args(int l, double ka, double c) {
  if (l < 0 || l > 40) throw DomainError(Stage::spectral_data, "l must lie in [0, 40]");
  if (!(ka > 0.0) || ka > specfun::kMaxArg) {
    throw DomainError(Stage::spectral_data, "ka must lie in (0, 50]");
  }
  if (!(c < 0.0)) throw DomainError(Stage::spectral_data, "c must be negative");
}

Extended checked_tan(int l, double delta) {
  if (!std::isfinite(delta)) throw DomainError(Stage::spectral_data, "non-finite phase shift");
  if (std::abs(std::cos(delta)) < 1e-12) {
    std::ostringstream os;
    os << "l=" << l << " delta=" << delta;
    throw NumericalError(Stage::spectral_data, Failure::tan_overflow,
                         "phase shift too close to pi/2", os.str());
  }
  return Extended(std::tan(delta));
}

// (J' - t Y') / (J - t Y) at ka, derivatives in the argument.
Extended bessel_ratio(int l, const Extended& t, const specfun::HalfIntegerBessel<Extended>& hb) {
  const auto i = static_cast<std::size_t>(l);
  const Extended num = hb.dJ[i] - t * hb.dY[i];
  const Extended den = hb.J[i] - t * hb.Y[i];
  const Extended scale = abs(hb.J[i]) + abs(t * hb.Y[i]);
  if (abs(den) < Extended(1e-12) * scale) {
    std::ostringstream os;
    os << "l=" << l << " tan(delta)=" << static_cast<double>(t);
    throw NumericalError(Stage::spectral_data, Failure::pole,
                         "phase shift at exterior node", os.str());
  }
  return num / den;
}

Extended moment_from_ratio(int l, const Extended& ratio, double ka, double c, double h) {
  const Extended d = Extended(ka) * ratio - Extended(c) * Extended(h);
  const Extended scale = abs(Extended(ka) * ratio) + abs(Extended(c) * Extended(h));
  if (d == 0 || abs(d) < Extended(1e-30) * scale) {
    std::ostringstream os;
    os << "l=" << l << " c=" << c << " h=" << h;
    throw NumericalError(Stage::spectral_data, Failure::singular_moment,
                         "m-function equals h at this node", os.str());
  }
  return Extended(l + 0.5) / d - 1;
}

}  // namespace

std::vector<double> MomentSet::as_double() const {
  std::vector<double> out;
  out.reserve(mu.size());
  for (const auto& m : mu) out.push_back(static_cast<double>(m));
  return out;
}

double m_value(int l, double delta, double ka, double c) {
  check_args(l, ka, c);
  const Extended t = checked_tan(l, delta);
  const auto hb = specfun::half_integer_bessel<Extended>(l, Extended(ka));
  return static_cast<double>(Extended(ka / c) * bessel_ratio(l, t, hb));
}

double m0_value(int l, double c) {
  if (!(c < 0.0)) throw DomainError(Stage::spectral_data, "c must be negative");
  return (l + 0.5) / c;
}

double moment(int l, double delta, double ka, double c, double h) {
  return static_cast<double>(moment_ext(l, checked_tan(l, delta), ka, c, h));
}

Extended moment_ext(int l, const Extended& tan_delta, double ka, double c, double h) {
  check_args(l, ka, c);
  const auto hb = specfun::half_integer_bessel<Extended>(l, Extended(ka));
  return moment_from_ratio(l, bessel_ratio(l, tan_delta, hb), ka, c, h);
}

MomentSet compute_moments(const PhaseShiftSet& phases, double c, double h, int count) {
  const int n = count < 0 ? phases.size() : count;
  if (n < 1 || n > phases.size()) {
    throw DomainError(Stage::spectral_data, "requested more moments than phase shifts");
  }
  const bool exact = phases.exact_tan.size() >= static_cast<std::size_t>(n);
  const double ka = phases.k * phases.a;
  check_args(n - 1, ka, c);
  const auto hb = specfun::half_integer_bessel<Extended>(n - 1, Extended(ka));
  MomentSet out;
  out.ka = ka;
  out.c = c;
  out.h = h;
  for (int l = 0; l < n; ++l) {
    const auto i = static_cast<std::size_t>(l);
    const Extended t = exact ? phases.exact_tan[i] : checked_tan(l, phases.deltas[i]);
    out.mu.push_back(moment_from_ratio(l, bessel_ratio(l, t, hb), ka, c, h));
  }
  return out;
}

}  // namespace fixinv
