#include "fixinv/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "fixinv/error.hpp"

namespace fixinv::specfun {

namespace {

void check_envelope(double nu, double x, const char* who) {
  if (!std::isfinite(nu) || !std::isfinite(x) || nu < 0.0 || nu > kMaxOrder ||
      x <= 0.0 || x > kMaxArg) {
    std::ostringstream os;
    os << who << ": (nu, x) = (" << nu << ", " << x
       << ") outside 0<=nu<=40, 0<x<=50";
    throw DomainError(Stage::specfun, os.str());
  }
}

// Ascending series, summed in extended precision with Kahan compensation.
double j_series(double nu, double x) {
  const Extended X(x), NU(nu);
  const Extended half = X / 2;
  const Extended q = -half * half;
  Extended term = pow(half, NU) / tgamma_ext(NU + 1);
  Extended sum = term, comp = 0;
  const Extended eps = std::numeric_limits<Extended>::epsilon();
  for (int k = 1; k < 500; ++k) {
    term *= q / (Extended(k) * (Extended(k) + NU));
    const Extended y = term - comp;
    const Extended t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (k > half && abs(term) <= eps * abs(sum)) break;
  }
  return static_cast<double>(sum);
}

// Hankel asymptotic expansion. Sets ok=false when the smallest term is too
// large for the envelope accuracy (orders comparable to x).
double j_hankel(double nu, double x, bool& ok) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0, q = 0.0;
  double term = 1.0, last = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (8.0 * k * x);
    if (std::abs(term) >= last && k > 2) break;
    last = std::abs(term);
    // k odd feeds Q with sign (-1)^((k-1)/2), k even feeds P with (-1)^(k/2)
    if (k % 2 == 1) {
      q += ((k / 2) % 2 == 0 ? term : -term);
    } else {
      p += ((k / 2) % 2 == 0 ? term : -term);
    }
    if (std::abs(term) < 1e-17) break;
  }
  ok = last < 1e-12;
  const double chi = x - (0.5 * nu + 0.25) * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * x)) *
         (p * std::cos(chi) - q * std::sin(chi));
}

double j_unchecked(double nu, double x) {
  if (x <= std::max(12.0, 2.0 * nu)) return j_series(nu, x);
  bool ok = false;
  const double v = j_hankel(nu, x, ok);
  return ok ? v : j_series(nu, x);
}

double j_prime_unchecked(double nu, double x) {
  if (nu >= 1.0) return 0.5 * (j_unchecked(nu - 1.0, x) - j_unchecked(nu + 1.0, x));
  // lower neighbour would have negative order
  return nu / x * j_unchecked(nu, x) - j_unchecked(nu + 1.0, x);
}

template <class Real>
Real sph_j_series(int l, const Real& x) {
  using std::abs;
  Real lead = 1;
  for (int m = 1; m <= l; ++m) lead *= x / Real(2 * m + 1);
  const Real q = -x * x / 2;
  Real term = 1, sum = 1;
  const Real eps = std::numeric_limits<Real>::epsilon();
  for (int k = 1; k < 200; ++k) {
    term *= q / (Real(k) * Real(2 * l + 2 * k + 1));
    sum += term;
    if (abs(term) <= eps * abs(sum)) break;
  }
  return lead * sum;
}

}  // namespace

double gamma_real(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError(Stage::specfun, "gamma_real: argument must be positive and finite");
  }
  static constexpr double g = 7.0;
  static constexpr double p[] = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_real(1.0 - x));
  }
  const double z = x - 1.0;
  double a = p[0];
  const double t = z + g + 0.5;
  for (int i = 1; i < 9; ++i) a += p[i] / (z + i);
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

double bessel_j(double nu, double x) {
  check_envelope(nu, x, "bessel_j");
  return j_unchecked(nu, x);
}

double bessel_j_prime(double nu, double x) {
  check_envelope(nu, x, "bessel_j_prime");
  return j_prime_unchecked(nu, x);
}

double bessel_y_halfint(int l, double x) {
  check_envelope(l + 0.5, x, "bessel_y_halfint");
  const auto t = half_integer_bessel<double>(l, x);
  return t.Y[static_cast<std::size_t>(l)];
}

double bessel_y_halfint_prime(int l, double x) {
  check_envelope(l + 0.5, x, "bessel_y_halfint_prime");
  const auto t = half_integer_bessel<double>(l, x);
  return t.dY[static_cast<std::size_t>(l)];
}

double bessel_j_dnu(double nu, double x, double dnu) {
  check_envelope(nu, x, "bessel_j_dnu");
  if (!(dnu > 0.0) || nu - dnu < 0.0 || nu + dnu > kMaxOrder) {
    throw DomainError(Stage::specfun, "bessel_j_dnu: order step leaves the envelope");
  }
  return (j_unchecked(nu + dnu, x) - j_unchecked(nu - dnu, x)) / (2.0 * dnu);
}

double bessel_j_prime_dnu(double nu, double x, double dnu) {
  check_envelope(nu, x, "bessel_j_prime_dnu");
  if (!(dnu > 0.0) || nu - dnu < 0.0 || nu + dnu + 1.0 > kMaxOrder) {
    throw DomainError(Stage::specfun, "bessel_j_prime_dnu: order step leaves the envelope");
  }
  return (j_prime_unchecked(nu + dnu, x) - j_prime_unchecked(nu - dnu, x)) / (2.0 * dnu);
}

template <class Real>
SphericalTable<Real> spherical_bessel(int lmax, const Real& x) {
  using std::abs;
  using std::cos;
  using std::sin;
  if (lmax < 0 || !(x > 0)) {
    throw DomainError(Stage::specfun, "spherical_bessel: need lmax >= 0 and x > 0");
  }
  const int n = lmax + 3;  // orders -1..lmax+1
  SphericalTable<Real> t;
  t.j.assign(static_cast<std::size_t>(n), Real(0));
  t.y.assign(static_cast<std::size_t>(n), Real(0));
  const Real s = sin(x), c = cos(x);

  t.y[0] = s / x;
  t.y[1] = -c / x;
  for (int l = 0; l <= lmax; ++l) {
    const auto i = static_cast<std::size_t>(l + 1);
    t.y[i + 1] = Real(2 * l + 1) / x * t.y[i] - t.y[i - 1];
  }

  t.j[0] = c / x;
  if (x < 1) {
    for (int l = 0; l <= lmax + 1; ++l) t.j[static_cast<std::size_t>(l + 1)] = sph_j_series(l, x);
    return t;
  }
  // Miller: downward from well above max(l, x), then fix the scale against
  // whichever of j_0, j_{-1} is better conditioned.
  const double digits = std::numeric_limits<Real>::digits10 + 2;
  const double xd = static_cast<double>(x);
  const int top = std::max(lmax + 1, static_cast<int>(xd)) +
                  static_cast<int>(std::sqrt(2.0 * xd * digits * 2.303)) + 20;
  std::vector<Real> f(static_cast<std::size_t>(top + 2), Real(0));
  f[static_cast<std::size_t>(top + 1)] = Real(1e-30);
  const Real big = Real(1e100);
  for (int l = top; l >= 0; --l) {
    // f index is order + 1
    const auto i = static_cast<std::size_t>(l + 1);
    f[i - 1] = Real(2 * l + 1) / x * f[i] - (i + 1 < f.size() ? f[i + 1] : Real(0));
    if (abs(f[i - 1]) > big) {
      for (std::size_t m = i - 1; m < f.size(); ++m) f[m] /= big;
    }
  }
  const Real scale = abs(s) >= abs(c) ? (s / x) / f[1] : (c / x) / f[0];
  for (int l = 0; l <= lmax + 1; ++l) {
    const auto i = static_cast<std::size_t>(l + 1);
    t.j[i] = f[i] * scale;
  }
  return t;
}

template <class Real>
std::vector<Real> modified_spherical_i(int lmax, const Real& x) {
  if (lmax < 0 || !(x > 0)) {
    throw DomainError(Stage::specfun, "modified_spherical_i: need lmax >= 0 and x > 0");
  }
  std::vector<Real> out;
  const Real q = x * x / 2;
  const Real eps = std::numeric_limits<Real>::epsilon();
  Real lead = 1;
  for (int l = 0; l <= lmax + 1; ++l) {
    if (l > 0) lead *= x / Real(2 * l + 1);
    Real term = 1, sum = 1;
    for (int k = 1; k < 2000; ++k) {
      term *= q / (Real(k) * Real(2 * l + 2 * k + 1));
      sum += term;
      if (term <= eps * sum) break;
    }
    out.push_back(lead * sum);
  }
  return out;
}

template <class Real>
HalfIntegerBessel<Real> half_integer_bessel(int lmax, const Real& x) {
  using std::sqrt;
  const auto t = spherical_bessel<Real>(lmax, x);
  const Real pi = boost::math::constants::pi<Real>();
  const Real s = sqrt(2 * x / pi);
  HalfIntegerBessel<Real> out;
  for (int l = 0; l <= lmax; ++l) {
    out.J.push_back(s * t.jl(l));
    out.Y.push_back(s * t.yl(l));
    out.dJ.push_back(s * (t.djl(l, x) + t.jl(l) / (2 * x)));
    out.dY.push_back(s * (t.dyl(l, x) + t.yl(l) / (2 * x)));
  }
  return out;
}

template SphericalTable<double> spherical_bessel<double>(int, const double&);
template SphericalTable<Extended> spherical_bessel<Extended>(int, const Extended&);
template std::vector<double> modified_spherical_i<double>(int, const double&);
template std::vector<Extended> modified_spherical_i<Extended>(int, const Extended&);
template HalfIntegerBessel<double> half_integer_bessel<double>(int, const double&);
template HalfIntegerBessel<Extended> half_integer_bessel<Extended>(int, const Extended&);

}  // namespace fixinv::specfun
