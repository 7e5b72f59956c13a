#include <sstream>

#include "fixinv/error.hpp"
#include "fixinv/moment_solver.hpp"

namespace fixinv {

namespace {

void check_nodes(const CauchyNodes& nodes) {
  const std::size_t n = nodes.x.size();
  if (n == 0 || nodes.y.size() != n) {
    throw DomainError(Stage::moment_solver, "Cauchy nodes must be non-empty and square");
  }
  if (n > static_cast<std::size_t>(kMaxCauchyDim)) {
    throw DomainError(Stage::moment_solver, "Cauchy dimension exceeds 64");
  }
  const Extended gap(1e-10);
  auto fail = [](const char* what, std::size_t i, std::size_t j) {
    std::ostringstream os;
    os << what << " (" << i << ", " << j << ")";
    throw NumericalError(Stage::moment_solver, Failure::degenerate_nodes, "coincident Cauchy nodes",
                         os.str());
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (abs(nodes.x[i] - nodes.x[j]) < gap) fail("x nodes", i, j);
      if (abs(nodes.y[i] - nodes.y[j]) < gap) fail("y nodes", i, j);
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (abs(nodes.x[i] + nodes.y[j]) < gap) fail("x_i + y_j = 0 at", i, j);
    }
  }
}

}  // namespace

ExtMatrix cauchy_matrix(const CauchyNodes& nodes) {
  check_nodes(nodes);
  const auto n = static_cast<Eigen::Index>(nodes.x.size());
  ExtMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = 1 / (nodes.x[static_cast<std::size_t>(i)] + nodes.y[static_cast<std::size_t>(j)]);
    }
  }
  return a;
}

ExtMatrix cauchy_inverse(const CauchyNodes& nodes) {
  check_nodes(nodes);
  const std::size_t n = nodes.x.size();
  const auto& x = nodes.x;
  const auto& y = nodes.y;
  // B_ij = P_j Q_i / ((x_j + y_i) U_i V_j)
  std::vector<Extended> P(n, Extended(1)), Q(n, Extended(1)), U(n, Extended(1)), V(n, Extended(1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t m = 0; m < n; ++m) {
      P[i] *= x[i] + y[m];
      Q[i] *= x[m] + y[i];
      if (m != i) {
        U[i] *= y[m] - y[i];
        V[i] *= x[m] - x[i];
      }
    }
  }
  ExtMatrix b(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          P[j] * Q[i] / ((x[j] + y[i]) * U[i] * V[j]);
    }
  }
  return b;
}

}  // namespace fixinv
