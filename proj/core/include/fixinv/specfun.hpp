#pragma once

#include <vector>

#include "fixinv/extended.hpp"

namespace fixinv::specfun {

// Evaluation envelope for the real-order routines.
inline constexpr double kMaxOrder = 40.0;
inline constexpr double kMaxArg = 50.0;

double gamma_real(double x);

/// J_nu(x), 0 <= nu <= 40, 0 < x <= 50.
double bessel_j(double nu, double x);

double bessel_j_prime(double nu, double x);

/// Y_{l+1/2}(x) from the spherical recurrences.
double bessel_y_halfint(int l, double x);
double bessel_y_halfint_prime(int l, double x);

/// dJ_nu(x)/dnu by central difference.
double bessel_j_dnu(double nu, double x, double dnu = 1e-4);

/// d/dnu of J'_nu(x), central difference of bessel_j_prime.
double bessel_j_prime_dnu(double nu, double x, double dnu = 1e-4);

/// Spherical Bessel values j_l, y_l for l = -1..lmax+1. Entry i holds
/// order i-1.
template <class Real>
struct SphericalTable {
  std::vector<Real> j;
  std::vector<Real> y;
  Real jl(int l) const { return j[static_cast<std::size_t>(l + 1)]; }
  Real yl(int l) const { return y[static_cast<std::size_t>(l + 1)]; }
  // derivatives in x, from f'_l = f_{l-1} - (l+1)/x f_l
  Real djl(int l, const Real& x) const { return jl(l - 1) - Real(l + 1) / x * jl(l); }
  Real dyl(int l, const Real& x) const { return yl(l - 1) - Real(l + 1) / x * yl(l); }
};

template <class Real>
SphericalTable<Real> spherical_bessel(int lmax, const Real& x);

/// Modified spherical i_l(x) for l = 0..lmax+1 (ascending series).
template <class Real>
std::vector<Real> modified_spherical_i(int lmax, const Real& x);

/// Half-integer cylinder functions and their x-derivatives, for l = 0..lmax.
template <class Real>
struct HalfIntegerBessel {
  std::vector<Real> J, dJ, Y, dY;
};

template <class Real>
HalfIntegerBessel<Real> half_integer_bessel(int lmax, const Real& x);

}  // namespace fixinv::specfun
