#include <cmath>

#include <gtest/gtest.h>

#include "fixinv/error.hpp"
#include "fixinv/forward_solver.hpp"
#include "fixinv/tuning.hpp"

using fixinv::PotentialCurve;
using fixinv::TuneCell;

namespace {

PotentialCurve sampled(double (*f)(double), double lo, double hi, int n) {
  PotentialCurve q;
  for (int i = 0; i < n; ++i) {
    const double r = lo + (hi - lo) * i / (n - 1);
    q.grid.push_back(r);
    q.values.push_back(f(r));
  }
  return q;
}

}  // namespace

TEST(Smoothness, ConstantIsZero) {
  const auto q = sampled([](double) { return 1.2; }, 0.0, 2.0, 50);
  EXPECT_NEAR(fixinv::smoothness(q, 0.05, 2.0), 0.0, 1e-12);
}

TEST(Smoothness, MonotoneIsEndpointDifference) {
  const auto q = sampled([](double r) { return r * r * r; }, 0.0, 2.0, 40);
  EXPECT_NEAR(fixinv::smoothness(q, 0.5, 2.0), 8.0 - 0.125, 1e-3);
}

TEST(Smoothness, TotalVariationOfOscillation) {
  const auto q = sampled([](double r) { return std::sin(2.0 * M_PI * r); }, 0.0, 2.0, 400);
  EXPECT_NEAR(fixinv::smoothness(q, 0.0, 2.0), 8.0, 1e-3);
}

TEST(Smoothness, InvariantUnderShift) {
  const auto q = sampled([](double r) { return std::cos(3.0 * r); }, 0.0, 2.0, 100);
  auto p = q;
  for (auto& v : p.values) v += 5.0;
  EXPECT_NEAR(fixinv::smoothness(q, 0.1, 2.0), fixinv::smoothness(p, 0.1, 2.0), 1e-12);
}

TEST(Smoothness, Errors) {
  const auto q = sampled([](double r) { return r; }, 0.5, 2.0, 50);
  EXPECT_THROW(fixinv::smoothness(q, 0.1, 2.0), fixinv::DomainError);
  EXPECT_THROW(fixinv::smoothness(q, 1.0, 3.0), fixinv::DomainError);
  const auto few = sampled([](double r) { return r; }, 0.0, 2.0, 5);
  EXPECT_THROW(fixinv::smoothness(few, 0.1, 2.0), fixinv::DomainError);
}

TEST(TuneOrder, TieBreaks) {
  const TuneCell a{-0.5, 0.2, true, 1.0, {}};
  EXPECT_TRUE(fixinv::tune_less({-1.0, 0.0, true, 0.5, {}}, a));
  EXPECT_TRUE(fixinv::tune_less({-0.3, 0.9, true, 1.0 + 1e-13, {}}, a));
  EXPECT_TRUE(fixinv::tune_less({-0.5, -0.1, true, 1.0, {}}, a));
  EXPECT_TRUE(fixinv::tune_less({-0.5, -0.2, true, 1.0, {}}, a));
  EXPECT_FALSE(fixinv::tune_less(a, a));
}

TEST(GridSearch, PicksSmoothestCellDeterministically) {
  const auto ph = fixinv::constant_well_phases(1.2, 2.0, 1.0, 10);
  fixinv::TuneGrid grid;
  grid.c_values = {-1.0, -0.3};
  grid.h_values = {0.0, -0.15};
  const auto serial = fixinv::grid_search(ph, grid, {}, 1);
  const auto threaded = fixinv::grid_search(ph, grid, {}, 4);
  ASSERT_EQ(serial.grid.results.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_TRUE(serial.grid.results[i].ok);
    EXPECT_EQ(serial.grid.results[i].s, threaded.grid.results[i].s);
  }
  EXPECT_DOUBLE_EQ(serial.best.c, -0.3);
  EXPECT_DOUBLE_EQ(serial.best.h, -0.15);
  for (const auto& cell : serial.grid.results) EXPECT_LE(serial.best.s, cell.s);
}

TEST(GridSearch, AllCellsFailing) {
  const auto ph = fixinv::constant_well_phases(1.2, 2.0, 1.0, 10);
  fixinv::TuneGrid grid;
  grid.c_values = {-1.0};
  grid.h_values = {0.0};
  fixinv::InversionConfig base;
  base.mode = fixinv::BsMode::multi;
  base.bs_count = 3;
  try {
    fixinv::grid_search(ph, grid, base);
    FAIL();
  } catch (const fixinv::NumericalError& e) {
    EXPECT_EQ(e.failure(), fixinv::Failure::search_failed);
    EXPECT_NE(e.diagnostics().find("c=-1"), std::string::npos);
  }
  grid.c_values = {0.5};
  EXPECT_THROW(fixinv::grid_search(ph, grid, {}), fixinv::DomainError);
}
