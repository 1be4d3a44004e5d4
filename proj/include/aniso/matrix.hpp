#pragma once

#include <array>
#include <cstddef>

namespace aniso {

inline constexpr int kMaxDim = 2;

// Points and vectors in R^d, d <= 2. For d == 1 the second slot stays zero.
using Point = std::array<double, kMaxDim>;

double dot(const Point& a, const Point& b, int dim) noexcept;
double norm(const Point& a, int dim) noexcept;

// Small dense real matrix of dimension 1 or 2, stored row-major in a fixed
// 2x2 block. Unused entries of a 1x1 matrix are kept at zero.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int dim, const std::array<double, 4>& entries);

  static Matrix identity(int dim);
  static Matrix scalar(int dim, double s);
  static Matrix from_rows(double a, double b, double c, double d);
  static Matrix from_scalar(double a);

  int dim() const noexcept { return dim_; }
  double operator()(int r, int c) const noexcept { return a_[2 * r + c]; }
  double& operator()(int r, int c) noexcept { return a_[2 * r + c]; }
  const std::array<double, 4>& entries() const noexcept { return a_; }

  Matrix operator*(const Matrix& o) const noexcept;
  Matrix operator+(const Matrix& o) const noexcept;
  Matrix operator-(const Matrix& o) const noexcept;
  Matrix operator*(double s) const noexcept;
  Point operator*(const Point& x) const noexcept;

  Matrix transpose() const noexcept;
  double det() const noexcept;
  // Throws Error(Singular) when |det| < 1e-12.
  Matrix inverse() const;

  double frobenius() const noexcept;
  // Largest singular value, closed form for d <= 2:
  // sigma_max^2 = (F + sqrt(F^2 - 4 det^2)) / 2 with F the squared Frobenius norm.
  double operator_norm() const noexcept;
  double max_abs() const noexcept;

  // x^T M x
  double quadratic(const Point& x) const noexcept;

  bool is_finite() const noexcept;

 private:
  int dim_ = 2;
  std::array<double, 4> a_{};
};

// Upper-triangular P with M = P^T P for symmetric positive-definite M.
// Throws Error(InvalidArgument) when M is not positive definite.
Matrix cholesky_factor(const Matrix& m);

}  // namespace aniso
