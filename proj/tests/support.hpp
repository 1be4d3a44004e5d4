#pragma once

// Seeded generators and independent reference computations shared by the
// test binaries.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "aniso/geometry.hpp"
#include "aniso/matrix.hpp"

namespace testing_support {

using aniso::Matrix;
using aniso::Point;

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Eigenvalue moduli of a 2x2 (or 1x1) matrix from the characteristic
// polynomial.
inline std::array<double, 2> eigen_moduli(const Matrix& m) {
  if (m.dim() == 1) return {std::abs(m(0, 0)), std::abs(m(0, 0))};
  const double tr = m(0, 0) + m(1, 1);
  const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const double disc = tr * tr - 4.0 * det;
  if (disc < 0.0) {
    const double r = std::sqrt(det);
    return {r, r};
  }
  const double s = std::sqrt(disc);
  const double a = std::abs(0.5 * (tr - s)), b = std::abs(0.5 * (tr + s));
  return {std::min(a, b), std::max(a, b)};
}

// Random real matrix with all eigenvalue moduli above min_modulus.
inline Matrix random_expansive(std::mt19937_64& rng, int dim, double min_modulus = 1.05) {
  for (;;) {
    Matrix m = dim == 1 ? Matrix::from_scalar(uniform(rng, -3.0, 3.0))
                        : Matrix::from_rows(uniform(rng, -3.0, 3.0), uniform(rng, -3.0, 3.0),
                                            uniform(rng, -3.0, 3.0), uniform(rng, -3.0, 3.0));
    const auto mod = eigen_moduli(m);
    if (mod[0] > min_modulus && mod[1] < 6.0) return m;
  }
}

// Random nonzero point with log-uniform radius in [2^lo, 2^hi].
inline Point random_point(std::mt19937_64& rng, int dim, double lo = -4.0, double hi = 4.0) {
  const double r = std::exp2(uniform(rng, lo, hi));
  if (dim == 1) return {uniform(rng, 0.0, 1.0) < 0.5 ? -r : r, 0.0};
  const double t = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  return {r * std::cos(t), r * std::sin(t)};
}

// Solves S = I + c M^T S M for symmetric S by the 3x3 linear system on
// (S00, S01, S11); Cramer's rule.
inline Matrix stein_solution(const Matrix& m, double c) {
  const double a = m(0, 0), b = m(0, 1), d = m(1, 0), e = m(1, 1);
  // (M^T S M)_{ij} = sum_kl M_ki S_kl M_lj.
  auto coeff = [&](int i, int j) {
    // Returns the coefficients of S00, S01, S11 in (M^T S M)_ij.
    const double mi0 = i == 0 ? a : b, mi1 = i == 0 ? d : e;
    const double mj0 = j == 0 ? a : b, mj1 = j == 0 ? d : e;
    return std::array<double, 3>{mi0 * mj0, mi0 * mj1 + mi1 * mj0, mi1 * mj1};
  };
  const std::array<std::array<int, 2>, 3> idx{{{0, 0}, {0, 1}, {1, 1}}};
  double sys[3][4];
  for (int r = 0; r < 3; ++r) {
    const auto cf = coeff(idx[r][0], idx[r][1]);
    for (int col = 0; col < 3; ++col) sys[r][col] = (r == col ? 1.0 : 0.0) - c * cf[col];
    sys[r][3] = idx[r][0] == idx[r][1] ? 1.0 : 0.0;
  }
  auto det3 = [](double x[3][3]) {
    return x[0][0] * (x[1][1] * x[2][2] - x[1][2] * x[2][1]) -
           x[0][1] * (x[1][0] * x[2][2] - x[1][2] * x[2][0]) +
           x[0][2] * (x[1][0] * x[2][1] - x[1][1] * x[2][0]);
  };
  double base[3][3];
  for (int r = 0; r < 3; ++r)
    for (int col = 0; col < 3; ++col) base[r][col] = sys[r][col];
  const double D = det3(base);
  double sol[3];
  for (int k = 0; k < 3; ++k) {
    double t[3][3];
    for (int r = 0; r < 3; ++r)
      for (int col = 0; col < 3; ++col) t[r][col] = col == k ? sys[r][3] : sys[r][col];
    sol[k] = det3(t) / D;
  }
  return Matrix::from_rows(sol[0], sol[1], sol[1], sol[2]);
}

// Scale index by direct search: the k with q(A^-(k+1) x) < 1 <= q(A^-k x),
// stepping one matrix application at a time.
inline int scale_index_oracle(const Matrix& a, const Matrix& shape, const Point& x) {
  const Matrix inv = a.inverse();
  Point y = x;
  int k = 0;
  // Shrink until inside, then step back.
  while (shape.quadratic(y) >= 1.0) {
    y = inv * y;
    ++k;
  }
  while (shape.quadratic(y) < 1.0) {
    y = a * y;
    --k;
  }
  // Now q(y) >= 1 with y = A^-k x, and q(A^-1 y) < 1.
  return k;
}

// exp(-pi |x|^2) has transform exp(-pi |xi|^2).
inline double gaussian_hat(const Point& xi, int dim) {
  const double r2 = xi[0] * xi[0] + (dim == 2 ? xi[1] * xi[1] : 0.0);
  return std::exp(-std::numbers::pi * r2);
}

}  // namespace testing_support
