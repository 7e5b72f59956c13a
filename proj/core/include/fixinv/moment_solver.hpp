#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "fixinv/extended.hpp"
#include "fixinv/spectral_data.hpp"

namespace fixinv {

using ExtMatrix = Eigen::Matrix<Extended, Eigen::Dynamic, Eigen::Dynamic>;
using ExtVector = Eigen::Matrix<Extended, Eigen::Dynamic, 1>;

/// Nodes of the Cauchy matrix A_ij = 1/(x_i + y_j).
struct CauchyNodes {
  std::vector<Extended> x;
  std::vector<Extended> y;
};

inline constexpr int kMaxCauchyDim = 64;

ExtMatrix cauchy_matrix(const CauchyNodes& nodes);

/// Closed-form inverse in O(n^2) from the node products.
ExtMatrix cauchy_inverse(const CauchyNodes& nodes);

/// Term half_weight * exp(sqrt_neg_lambda * x) of F. A negative
/// sqrt_neg_lambda is a decaying (spurious) term.
struct BoundTerm {
  Extended sqrt_neg_lambda = 0;
  Extended half_weight = 0;

  double lambda() const;
  double weight() const;
};

struct SpectralExpansion {
  std::vector<Extended> coeffs;  // c_0..c_N
  std::vector<BoundTerm> bound_terms;
  double c = -1.0;
  double h = 0.0;
  double moment_residual = 0.0;  // max |A c - mu| of the solved system

  /// F(0) = sum half_weight + sum c_n.
  Extended f0() const;
};

SpectralExpansion solve_zero_bs(const MomentSet& mu, bool drop_c0 = false);

/// Default trial pair (-1, -4)/c^2.
std::pair<double, double> default_trial_lambdas(double c);

/// Uses all N+2 moments of `mu`.
SpectralExpansion solve_one_bs(const MomentSet& mu, std::pair<double, double> trial_lambdas);

struct MultiBsOptions {
  int max_iter = 200;
  double tol = 1e-8;
  /// Constraint sum b_i + sum c_n = -h instead of sum b_i/2 + sum c_n = -h.
  bool literal_constraint = false;
};

/// B = initial_lambdas.size() >= 1 bound terms; uses all N+2B moments.
SpectralExpansion solve_multi_bs(const MomentSet& mu, const std::vector<double>& initial_lambdas,
                                 const MultiBsOptions& opts = {});

Extended evaluate_F(const SpectralExpansion& exp, const Extended& x);
double evaluate_F(const SpectralExpansion& exp, double x);

/// Moments implied by an expansion, l = 0..count-1 (forward map).
std::vector<Extended> forward_moments(const SpectralExpansion& exp, int count);

}  // namespace fixinv
