#include <cmath>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/bessel_prime.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <gtest/gtest.h>

#include "fixinv/error.hpp"
#include "fixinv/specfun.hpp"

namespace sf = fixinv::specfun;

TEST(Gamma, MatchesBoost) {
  for (double x : {0.1, 0.5, 1.0, 1.5, 3.7, 10.25, 22.0, 41.5}) {
    const double ref = boost::math::tgamma(x);
    EXPECT_NEAR(sf::gamma_real(x) / ref, 1.0, 1e-13) << x;
  }
}

TEST(Gamma, NonPositiveArgumentsThrow) {
  EXPECT_THROW(sf::gamma_real(0.0), fixinv::DomainError);
  EXPECT_THROW(sf::gamma_real(-3.0), fixinv::DomainError);
  EXPECT_THROW(sf::gamma_real(-0.5), fixinv::DomainError);
}

TEST(Gamma, ExtendedMatchesDouble) {
  for (double x : {0.75, 2.5, 17.0}) {
    EXPECT_NEAR(static_cast<double>(fixinv::tgamma_ext(fixinv::Extended(x))),
                boost::math::tgamma(x), 1e-13 * boost::math::tgamma(x));
  }
}

TEST(BesselJ, MatchesBoostOverEnvelope) {
  double worst = 0.0;
  for (double nu = 0.0; nu <= 40.0; nu += 0.35) {
    for (double x = 0.05; x <= 50.0; x *= 1.37) {
      const double ref = boost::math::cyl_bessel_j(nu, x);
      const double got = sf::bessel_j(nu, x);
      worst = std::max(worst, std::abs(got - ref) / std::max(1.0, std::abs(ref)));
    }
  }
  EXPECT_LT(worst, 1e-11);
}

TEST(BesselJ, DerivativeMatchesBoost) {
  for (double nu : {0.0, 0.3, 0.5, 1.0, 2.75, 11.5, 30.0}) {
    for (double x : {0.2, 1.0, 4.5, 13.0, 37.0}) {
      const double ref = boost::math::cyl_bessel_j_prime(nu, x);
      EXPECT_NEAR(sf::bessel_j_prime(nu, x), ref, 1e-11 * std::max(1.0, std::abs(ref)))
          << nu << " " << x;
    }
  }
}

TEST(BesselJ, RecurrenceIdentity) {
  // J_{nu-1} + J_{nu+1} = (2 nu / x) J_nu
  for (double nu : {1.25, 3.5, 7.0, 19.3}) {
    for (double x : {0.7, 3.0, 12.0, 29.0, 48.0}) {
      const double lhs = sf::bessel_j(nu - 1, x) + sf::bessel_j(nu + 1, x);
      const double rhs = 2.0 * nu / x * sf::bessel_j(nu, x);
      EXPECT_NEAR(lhs, rhs, 1e-10) << nu << " " << x;
    }
  }
}

TEST(BesselJ, OrderDerivativeAgainstDifference) {
  const double nu = 2.4, x = 3.1;
  const double fd = (boost::math::cyl_bessel_j(nu + 1e-5, x) -
                     boost::math::cyl_bessel_j(nu - 1e-5, x)) / 2e-5;
  EXPECT_NEAR(sf::bessel_j_dnu(nu, x), fd, 1e-8);
}

TEST(BesselJ, OutsideEnvelopeThrows) {
  EXPECT_THROW(sf::bessel_j(41.0, 1.0), fixinv::DomainError);
  EXPECT_THROW(sf::bessel_j(1.0, 51.0), fixinv::DomainError);
  EXPECT_THROW(sf::bessel_j(-0.5, 1.0), fixinv::DomainError);
  EXPECT_THROW(sf::bessel_j(1.0, 0.0), fixinv::DomainError);
}

TEST(SphericalBessel, MatchesBoost) {
  for (double x : {0.01, 0.3, 1.0, 2.5, 9.0, 33.0}) {
    const auto t = sf::spherical_bessel<double>(20, x);
    for (int l = 0; l <= 20; ++l) {
      const double jr = boost::math::sph_bessel(l, x);
      EXPECT_NEAR(t.jl(l), jr, 1e-13 * std::max(std::abs(jr), 1e-300) + 1e-300) << l << " " << x;
      if (x >= 0.3 || l < 8) {
        const double yr = boost::math::sph_neumann(l, x);
        EXPECT_NEAR(t.yl(l) / yr, 1.0, 1e-12) << l << " " << x;
      }
    }
  }
}

TEST(SphericalBessel, Wronskian) {
  // j_l y_l' - j_l' y_l = 1/x^2
  for (double x : {0.4, 1.0, 5.0, 17.0, 45.0}) {
    const auto t = sf::spherical_bessel<double>(12, x);
    for (int l = 0; l <= 12; ++l) {
      const double w = t.jl(l) * t.dyl(l, x) - t.djl(l, x) * t.yl(l);
      EXPECT_NEAR(w * x * x, 1.0, 1e-10) << l << " " << x;
    }
  }
}

TEST(SphericalBessel, ExtendedAgreesWithDouble) {
  const auto d = sf::spherical_bessel<double>(10, 3.3);
  const auto q = sf::spherical_bessel<fixinv::Extended>(10, fixinv::Extended(3.3));
  for (int l = 0; l <= 10; ++l) {
    EXPECT_NEAR(static_cast<double>(q.jl(l)), d.jl(l), 1e-15 + 1e-13 * std::abs(d.jl(l)));
  }
}

TEST(ModifiedSphericalI, MatchesBoost) {
  for (double x : {0.2, 1.5, 6.0}) {
    const auto in = sf::modified_spherical_i<double>(8, x);
    for (int l = 0; l <= 8; ++l) {
      const double ref = std::sqrt(M_PI / (2 * x)) * boost::math::cyl_bessel_i(l + 0.5, x);
      EXPECT_NEAR(in[static_cast<std::size_t>(l)] / ref, 1.0, 1e-12);
    }
  }
}

TEST(HalfIntegerBessel, CylinderWronskian) {
  // J Y' - J' Y = 2 / (pi x)
  for (double x : {0.5, 2.0, 11.0}) {
    const auto hb = sf::half_integer_bessel<double>(10, x);
    for (std::size_t l = 0; l <= 10; ++l) {
      const double w = hb.J[l] * hb.dY[l] - hb.dJ[l] * hb.Y[l];
      EXPECT_NEAR(w * M_PI * x / 2.0, 1.0, 1e-10);
      EXPECT_NEAR(hb.J[l], boost::math::cyl_bessel_j(l + 0.5, x), 1e-13);
    }
  }
}
