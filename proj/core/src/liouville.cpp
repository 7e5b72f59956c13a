#include "fixinv/liouville.hpp"

#include <cmath>

#include "fixinv/error.hpp"

namespace fixinv {

void TransformParams::validate() const {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError(Stage::liouville, "a must be positive");
  if (!(c < 0.0) || !std::isfinite(c)) throw DomainError(Stage::liouville, "c must be negative");
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError(Stage::liouville, "k must be positive");
}

double x_of_r(double r, const TransformParams& p) {
  p.validate();
  if (!(r > 0.0) || r > p.a) throw DomainError(Stage::liouville, "x_of_r: r must lie in (0, a]");
  return p.c * std::log(r / p.a);
}

double r_of_x(double x, const TransformParams& p) {
  p.validate();
  if (!(x >= 0.0)) throw DomainError(Stage::liouville, "r_of_x: x must be non-negative");
  return p.a * std::exp(x / p.c);
}

double auxiliary_potential(const RadialPotential& q, const TransformParams& p, double x) {
  const double r = r_of_x(x, p);
  const double f = p.a / p.c;
  return f * f * std::exp(2.0 * x / p.c) * (q(r) - p.k * p.k);
}

PotentialCurve physical_potential(const PotentialCurve& Q, const TransformParams& p) {
  p.validate();
  if (Q.grid.empty() || Q.grid.size() != Q.values.size()) {
    throw DomainError(Stage::liouville, "physical_potential: empty or ragged grid");
  }
  PotentialCurve out;
  out.meta = Q.meta;
  out.meta.k = p.k;
  out.meta.a = p.a;
  out.meta.c = p.c;
  out.grid.resize(Q.size());
  out.values.resize(Q.size());
  const std::size_t n = Q.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double r = r_of_x(Q.grid[i], p);
    out.grid[n - 1 - i] = r;
    out.values[n - 1 - i] = p.k * p.k + (p.c * p.c) / (r * r) * Q.values[i];
  }
  return out;
}

}  // namespace fixinv
