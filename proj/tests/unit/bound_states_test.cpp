#include <cmath>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/bessel_prime.hpp>
#include <gtest/gtest.h>

#include "fixinv/bound_states.hpp"
#include "fixinv/error.hpp"

namespace bm = boost::math;

TEST(BesselJ1Zeros, MatchBoost) {
  const auto z = fixinv::bessel_j1_zeros(30.0);
  ASSERT_EQ(z.size(), 9u);
  for (std::size_t i = 0; i < z.size(); ++i) {
    EXPECT_NEAR(z[i], bm::cyl_bessel_j_zero(1.0, static_cast<int>(i) + 1), 1e-9);
  }
}

TEST(BoundStateCount, KnownTransitions) {
  const double edges[] = {3.8317, 7.0156, 10.174, 13.324};
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(fixinv::count_bound_states_h0(edges[i] - 2e-3), i + 1);
    EXPECT_EQ(fixinv::count_bound_states_h0(edges[i] + 2e-3), i + 2);
  }
  EXPECT_EQ(fixinv::count_bound_states_h0(0.5), 1);
  EXPECT_EQ(fixinv::count_bound_states_h0(4.92), 2);
  bool near = false;
  fixinv::count_bound_states_h0(bm::cyl_bessel_j_zero(1.0, 1), &near);
  EXPECT_TRUE(near);
}

TEST(BoundStateCount, PositionsAgreeWithCount) {
  for (double ka : {0.5, 2.0, 4.0, 6.0, 8.0, 11.0}) {
    const auto set = fixinv::bound_state_positions(fixinv::ExpWellParams::from_kappa_a(ka, -1.0, 0.0));
    EXPECT_EQ(set.count, fixinv::count_bound_states_h0(ka)) << ka;
    for (std::size_t i = 1; i < set.lambdas.size(); ++i) EXPECT_LT(set.lambdas[i - 1], set.lambdas[i]);
  }
}

TEST(BoundStates, SatisfyBoundaryCondition) {
  // phi = J_mu(kappa_a e^{-t x}); phi'(0) = h phi(0)
  const double ka = 4.92, c = -1.0, h = 0.3;
  const auto p = fixinv::ExpWellParams::from_kappa_a(ka, c, h);
  const auto set = fixinv::bound_state_positions(p);
  ASSERT_GE(set.count, 1);
  for (double lam : set.lambdas) {
    const double mu = std::sqrt(-lam) / p.t;
    const double phi = bm::cyl_bessel_j(mu, ka);
    const double dphi = -p.t * ka * bm::cyl_bessel_j_prime(mu, ka);
    EXPECT_NEAR(dphi - h * phi, 0.0, 1e-8) << lam;
  }
}

TEST(BoundStates, StepHeightIsInverseNorm) {
  for (auto [ka, c, h] : {std::tuple{2.25, -0.74, 0.0}, std::tuple{4.92, -1.0, 0.0},
                          std::tuple{3.0, -1.25, 0.4}}) {
    const auto p = fixinv::ExpWellParams::from_kappa_a(ka, c, h);
    const auto set = fixinv::bound_state_positions(p);
    for (double lam : set.lambdas) {
      const double mu = std::sqrt(-lam) / p.t;
      const double phi0 = bm::cyl_bessel_j(mu, ka);
      auto phi2 = [&](double x) {
        const double v = bm::cyl_bessel_j(mu, ka * std::exp(-p.t * x)) / phi0;
        return v * v;
      };
      bm::quadrature::exp_sinh<double> integrator;
      const double norm = integrator.integrate(phi2);
      EXPECT_NEAR(fixinv::step_height(lam, p), 1.0 / norm, 1e-6 / norm) << ka << " " << lam;
    }
  }
}

TEST(Assessment, GaussAndWoodsSaxonValues) {
  const double g = fixinv::assessment_kappa_a(1.5, 1.5, fixinv::AssessmentModel::free_motion);
  const auto gs = fixinv::assess(g, -0.74, 0.0);
  ASSERT_GE(gs.count, 1);
  EXPECT_NEAR(gs.lambdas.front(), -3.22, 0.02);
  const auto ws = fixinv::assess(3.0, -1.25, 0.0);
  ASSERT_GE(ws.count, 1);
  EXPECT_NEAR(ws.lambdas.front(), -2.44, 0.02);
  EXPECT_EQ(gs.weights.size(), gs.lambdas.size());
}

TEST(Assessment, OriginModelOfConstantWell) {
  const double ka = fixinv::assessment_kappa_a(1.0, 2.0, fixinv::AssessmentModel::origin_value, 0.8);
  EXPECT_NEAR(ka, 2.0 * std::sqrt(0.2), 1e-15);
  const auto set = fixinv::assess(ka, -1.0, 0.0);
  ASSERT_EQ(set.count, 1);
  EXPECT_NEAR(set.lambdas[0], -0.105, 0.002);
  EXPECT_THROW(fixinv::assessment_kappa_a(1.0, 2.0, fixinv::AssessmentModel::origin_value, 1.5),
               fixinv::DomainError);
}

TEST(Reducibility, Window) {
  EXPECT_EQ(fixinv::reducibility_window(2.0), fixinv::Reducibility::already_one);
  EXPECT_EQ(fixinv::reducibility_window(4.92), fixinv::Reducibility::reducible);
  EXPECT_EQ(fixinv::reducibility_window(6.0), fixinv::Reducibility::outside_lemma);
}

TEST(BoundStates, InputErrors) {
  EXPECT_THROW(fixinv::ExpWellParams::from_kappa_a(1.0, 0.5, 0.0), fixinv::DomainError);
  EXPECT_THROW(fixinv::count_bound_states_h0(-1.0), fixinv::DomainError);
  const auto p = fixinv::ExpWellParams::from_kappa_a(2.0, -1.0, 0.0);
  EXPECT_THROW(fixinv::step_height(-0.77, p), fixinv::DomainError);
  EXPECT_THROW(fixinv::step_height(0.5, p), fixinv::DomainError);
}
