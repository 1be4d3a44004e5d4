#include "aniso/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "aniso/error.hpp"

namespace aniso {

double dot(const Point& a, const Point& b, int dim) noexcept {
  double s = a[0] * b[0];
  if (dim == 2) s += a[1] * b[1];
  return s;
}

double norm(const Point& a, int dim) noexcept {
  return dim == 2 ? std::hypot(a[0], a[1]) : std::abs(a[0]);
}

Matrix::Matrix(int dim, const std::array<double, 4>& entries) : dim_(dim), a_(entries) {
  if (dim_ == 1) a_ = {entries[0], 0.0, 0.0, 0.0};
}

Matrix Matrix::identity(int dim) { return scalar(dim, 1.0); }

Matrix Matrix::scalar(int dim, double s) {
  return dim == 1 ? Matrix(1, {s, 0, 0, 0}) : Matrix(2, {s, 0, 0, s});
}

Matrix Matrix::from_rows(double a, double b, double c, double d) { return Matrix(2, {a, b, c, d}); }

Matrix Matrix::from_scalar(double a) { return Matrix(1, {a, 0, 0, 0}); }

Matrix Matrix::operator*(const Matrix& o) const noexcept {
  if (dim_ == 1) return Matrix(1, {a_[0] * o.a_[0], 0, 0, 0});
  return Matrix(2, {a_[0] * o.a_[0] + a_[1] * o.a_[2], a_[0] * o.a_[1] + a_[1] * o.a_[3],
                    a_[2] * o.a_[0] + a_[3] * o.a_[2], a_[2] * o.a_[1] + a_[3] * o.a_[3]});
}

Matrix Matrix::operator+(const Matrix& o) const noexcept {
  Matrix r = *this;
  for (int i = 0; i < 4; ++i) r.a_[i] += o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const noexcept {
  Matrix r = *this;
  for (int i = 0; i < 4; ++i) r.a_[i] -= o.a_[i];
  return r;
}

Matrix Matrix::operator*(double s) const noexcept {
  Matrix r = *this;
  for (double& v : r.a_) v *= s;
  return r;
}

Point Matrix::operator*(const Point& x) const noexcept {
  if (dim_ == 1) return {a_[0] * x[0], 0.0};
  return {a_[0] * x[0] + a_[1] * x[1], a_[2] * x[0] + a_[3] * x[1]};
}

Matrix Matrix::transpose() const noexcept {
  if (dim_ == 1) return *this;
  return Matrix(2, {a_[0], a_[2], a_[1], a_[3]});
}

double Matrix::det() const noexcept {
  return dim_ == 1 ? a_[0] : a_[0] * a_[3] - a_[1] * a_[2];
}

Matrix Matrix::inverse() const {
  const double d = det();
  if (!(std::abs(d) >= 1e-12)) fail(ErrorCode::Singular, "matrix is singular (|det| < 1e-12)");
  if (dim_ == 1) return Matrix(1, {1.0 / a_[0], 0, 0, 0});
  return Matrix(2, {a_[3] / d, -a_[1] / d, -a_[2] / d, a_[0] / d});
}

double Matrix::frobenius() const noexcept {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double Matrix::operator_norm() const noexcept {
  if (dim_ == 1) return std::abs(a_[0]);
  // Scale first so squaring cannot overflow for large powers.
  const double scale = max_abs();
  if (scale == 0.0) return 0.0;
  const Matrix m = *this * (1.0 / scale);
  double f = 0.0;
  for (double v : m.a_) f += v * v;
  const double dt = m.det();
  const double disc = std::max(0.0, f * f - 4.0 * dt * dt);
  return scale * std::sqrt(0.5 * (f + std::sqrt(disc)));
}

double Matrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

double Matrix::quadratic(const Point& x) const noexcept {
  if (dim_ == 1) return a_[0] * x[0] * x[0];
  return a_[0] * x[0] * x[0] + (a_[1] + a_[2]) * x[0] * x[1] + a_[3] * x[1] * x[1];
}

bool Matrix::is_finite() const noexcept {
  for (double v : a_)
    if (!std::isfinite(v)) return false;
  return true;
}

Matrix cholesky_factor(const Matrix& m) {
  if (m.dim() == 1) {
    if (!(m(0, 0) > 0.0)) fail(ErrorCode::InvalidArgument, "shape matrix is not positive definite");
    return Matrix::from_scalar(std::sqrt(m(0, 0)));
  }
  const double a = m(0, 0);
  const double b = 0.5 * (m(0, 1) + m(1, 0));
  if (!(a > 0.0)) fail(ErrorCode::InvalidArgument, "shape matrix is not positive definite");
  const double l11 = std::sqrt(a);
  const double l21 = b / l11;
  const double rest = m(1, 1) - l21 * l21;
  if (!(rest > 0.0)) fail(ErrorCode::InvalidArgument, "shape matrix is not positive definite");
  return Matrix::from_rows(l11, l21, 0.0, std::sqrt(rest));
}

}  // namespace aniso
