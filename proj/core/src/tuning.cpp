#include "fixinv/tuning.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include <boost/math/interpolators/pchip.hpp>

#include "fixinv/error.hpp"
#include "fixinv/gl_reconstruction.hpp"

namespace fixinv {

double smoothness(const PotentialCurve& q, double r0, double a) {
  const auto& r = q.grid;
  if (r.size() < 10 || q.values.size() != r.size()) {
    throw DomainError(Stage::tuning, "smoothness needs at least 10 samples");
  }
  const double tol = 1e-9 * std::max(1.0, std::abs(a));
  if (!(r0 < a) || r.front() > r0 + tol || r.back() < a - tol) {
    throw DomainError(Stage::tuning, "samples do not cover [r0, a]");
  }
  std::vector<double> x = r, y = q.values;
  boost::math::interpolators::pchip<std::vector<double>> spline(std::move(x), std::move(y));
  const double lo = std::max(r0, r.front());
  const double hi = std::min(a, r.back());
  // breakpoints: the sample nodes inside (lo, hi), each interval cut in ten
  std::vector<double> knots{lo};
  for (double v : r) {
    if (v > lo && v < hi) knots.push_back(v);
  }
  knots.push_back(hi);
  double total = 0.0;
  double prev = spline(lo);
  for (std::size_t i = 1; i < knots.size(); ++i) {
    const double h = (knots[i] - knots[i - 1]) / 10.0;
    for (int m = 1; m <= 10; ++m) {
      const double v = spline(m == 10 ? knots[i] : knots[i - 1] + m * h);
      total += std::abs(v - prev);
      prev = v;
    }
  }
  return total;
}

bool tune_less(const TuneCell& a, const TuneCell& b) {
  if (std::abs(a.s - b.s) > 1e-12) return a.s < b.s;
  if (std::abs(a.c) != std::abs(b.c)) return std::abs(a.c) < std::abs(b.c);
  if (std::abs(a.h) != std::abs(b.h)) return std::abs(a.h) < std::abs(b.h);
  if (a.c != b.c) return a.c < b.c;
  return a.h < b.h;
}

TuneResult grid_search(const PhaseShiftSet& phases, const TuneGrid& grid,
                       const InversionConfig& base, int jobs) {
  if (grid.c_values.empty() || grid.h_values.empty()) {
    throw DomainError(Stage::tuning, "tuning grid is empty");
  }
  for (double c : grid.c_values) {
    if (!(c < 0.0)) throw DomainError(Stage::tuning, "all c values must be negative");
  }
  if (!(grid.r0 < phases.a)) throw DomainError(Stage::tuning, "r0 must be below a");

  TuneResult out;
  out.grid = grid;
  auto& cells = out.grid.results;
  cells.clear();
  for (double c : grid.c_values) {
    for (double h : grid.h_values) cells.push_back({c, h, false, 0.0, {}});
  }

  auto run = [&](TuneCell& cell) {
    InversionConfig cfg = base;
    cfg.c = cell.c;
    cfg.h = cell.h;
    cfg.r0 = grid.r0;
    try {
      cell.s = reconstruct(phases, cfg).report.smoothness;
      cell.ok = std::isfinite(cell.s);
      if (!cell.ok) cell.diagnostics = "non-finite smoothness";
    } catch (const Error& e) {
      cell.diagnostics = e.what();
    }
  };
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(cells.size())));
  if (workers == 1) {
    for (auto& cell : cells) run(cell);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) run(cells[i]);
      });
    }
    for (auto& t : pool) t.join();
  }

  bool found = false;
  for (const auto& cell : cells) {
    if (!cell.ok) continue;
    if (!found || tune_less(cell, out.best)) out.best = cell;
    found = true;
  }
  if (!found) {
    std::ostringstream os;
    for (const auto& cell : cells) {
      os << "(c=" << cell.c << ", h=" << cell.h << "): " << cell.diagnostics << '\n';
    }
    throw NumericalError(Stage::tuning, Failure::search_failed, "every grid cell failed", os.str());
  }
  return out;
}

}  // namespace fixinv
