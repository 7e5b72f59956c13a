#include <boost/multiprecision/cpp_int.hpp>
#include <gtest/gtest.h>

#include "fixinv/error.hpp"
#include "fixinv/moment_solver.hpp"

using boost::multiprecision::cpp_rational;
using fixinv::CauchyNodes;
using fixinv::Extended;

namespace {

using RatMatrix = std::vector<std::vector<cpp_rational>>;

// Gauss-Jordan over the rationals
RatMatrix exact_inverse(RatMatrix a) {
  const std::size_t n = a.size();
  RatMatrix inv(n, std::vector<cpp_rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const cpp_rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const cpp_rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// x_i = i + 1/2, y_j = (num/den) j: the moment-system layout
struct RationalNodes {
  std::vector<cpp_rational> x, y;
  CauchyNodes ext() const {
    CauchyNodes n;
    for (const auto& v : x) n.x.push_back(Extended(static_cast<double>(v)));
    for (const auto& v : y) {
      n.y.push_back(Extended(static_cast<double>(numerator(v))) /
                    Extended(static_cast<double>(denominator(v))));
    }
    return n;
  }
};

RationalNodes moment_nodes(int n, int num, int den) {
  RationalNodes r;
  for (int i = 0; i < n; ++i) {
    r.x.push_back(cpp_rational(2 * i + 1, 2));
    r.y.push_back(cpp_rational(num * i, den));
  }
  return r;
}

double rel_err(const Extended& got, const cpp_rational& ref) {
  const double r = static_cast<double>(ref);
  return std::abs(static_cast<double>(got) - r) / std::max(std::abs(r), 1e-300);
}

}  // namespace

TEST(Cauchy, HilbertInverseCorner) {
  CauchyNodes n;
  for (int i = 0; i < 5; ++i) {
    n.x.push_back(Extended(i) + Extended(0.5));
    n.y.push_back(Extended(i) + Extended(0.5));
  }
  const auto inv = fixinv::cauchy_inverse(n);
  EXPECT_NEAR(static_cast<double>(inv(0, 0)), 25.0, 1e-20);
  EXPECT_NEAR(static_cast<double>(inv(4, 4)), 44100.0, 1e-15);
}

TEST(Cauchy, MatchesExactRationalInverse) {
  for (int dim = 1; dim <= 8; ++dim) {
    for (auto [num, den] : {std::pair{1, 1}, std::pair{3, 10}, std::pair{3, 2}}) {
      const auto rn = moment_nodes(dim, num, den);
      RatMatrix a(static_cast<std::size_t>(dim), std::vector<cpp_rational>(static_cast<std::size_t>(dim)));
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
          a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              1 / (rn.x[static_cast<std::size_t>(i)] + rn.y[static_cast<std::size_t>(j)]);
        }
      }
      const auto ref = exact_inverse(a);
      const auto inv = fixinv::cauchy_inverse(rn.ext());
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
          EXPECT_LT(rel_err(inv(i, j), ref[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]),
                    1e-14)
              << "dim=" << dim << " (" << i << "," << j << ")";
        }
      }
    }
  }
}

TEST(Cauchy, ProductIsIdentity) {
  for (int dim : {4, 8, 12}) {
    for (double step : {0.3, 1.0, 2.5}) {
      CauchyNodes n;
      for (int i = 0; i < dim; ++i) {
        n.x.push_back(Extended(i) + Extended(0.5));
        n.y.push_back(Extended(step) * i);
      }
      const auto a = fixinv::cauchy_matrix(n);
      const auto inv = fixinv::cauchy_inverse(n);
      const fixinv::ExtMatrix e = a * inv - fixinv::ExtMatrix::Identity(dim, dim);
      EXPECT_LT(static_cast<double>(e.cwiseAbs().maxCoeff()), 1e-8) << dim << " " << step;
    }
  }
}

TEST(Cauchy, DegenerateNodesThrow) {
  CauchyNodes n{{Extended(0.5), Extended(1.5)}, {Extended(0), Extended(0)}};
  try {
    fixinv::cauchy_inverse(n);
    FAIL();
  } catch (const fixinv::NumericalError& e) {
    EXPECT_EQ(e.failure(), fixinv::Failure::degenerate_nodes);
  }
  CauchyNodes m{{Extended(0.5), Extended(1.5)}, {Extended(-0.5), Extended(1)}};
  EXPECT_THROW(fixinv::cauchy_matrix(m), fixinv::NumericalError);
  CauchyNodes ragged{{Extended(0.5)}, {}};
  EXPECT_THROW(fixinv::cauchy_inverse(ragged), fixinv::DomainError);
}
