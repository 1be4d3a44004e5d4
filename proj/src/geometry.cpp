#include "aniso/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "aniso/error.hpp"

namespace aniso {

double gelfand_spectral_radius(const Matrix& m, int depth, double rtol) {
  const double n0 = m.operator_norm();
  if (n0 == 0.0) return 0.0;
  // m^(2^s) = exp(log_scale) * b with ||b|| = 1.
  Matrix b = m * (1.0 / n0);
  double log_scale = std::log(n0);
  double estimate = n0;
  double denom = 1.0;
  int settled = 0;
  for (int s = 1; s <= depth; ++s) {
    b = b * b;
    const double n = b.operator_norm();
    if (n == 0.0) return 0.0;  // nilpotent
    b = b * (1.0 / n);
    log_scale = 2.0 * log_scale + std::log(n);
    denom *= 2.0;
    const double next = std::exp(log_scale / denom);
    settled = std::abs(next - estimate) <= rtol * next ? settled + 1 : 0;
    estimate = next;
    if (settled == 2) break;
  }
  return estimate;
}

DilationParams validate_dilation(const Matrix& matrix) {
  if (matrix.dim() != 1 && matrix.dim() != 2)
    fail(ErrorCode::UnsupportedDimension, "only dimensions 1 and 2 are supported");
  if (!matrix.is_finite()) fail(ErrorCode::InvalidArgument, "matrix has non-finite entries");
  const double det = std::abs(matrix.det());
  if (!(det >= 1e-12)) fail(ErrorCode::Singular, "matrix is singular (|det| < 1e-12)");

  DilationParams p;
  p.matrix = matrix;
  p.dimension = matrix.dim();
  p.det_modulus = det;
  p.adjoint = matrix.transpose();
  p.max_modulus = gelfand_spectral_radius(matrix);
  p.min_modulus = 1.0 / gelfand_spectral_radius(matrix.inverse());
  if (!(p.min_modulus > 1.0 + 1e-9))
    fail(ErrorCode::NotExpansive,
         "smallest eigenvalue modulus " + std::to_string(p.min_modulus) + " does not exceed 1");
  p.lambda_minus = std::pow(p.min_modulus, 1.0 - kLambdaGap);
  p.lambda_plus = std::pow(p.max_modulus, 1.0 + kLambdaGap);
  const double log_b = std::log(p.det_modulus);
  p.zeta_minus = std::log(p.lambda_minus) / log_b;
  p.zeta_plus = std::log(p.lambda_plus) / log_b;
  return p;
}

double unit_ball_volume(int dim) noexcept { return dim == 1 ? 2.0 : std::numbers::pi; }

double Ellipsoid::volume() const noexcept {
  return unit_ball_volume(shape.dim()) / std::sqrt(shape.det());
}

Ellipsoid make_ellipsoid(const DilationParams& params, const Matrix& shape) {
  Ellipsoid e{shape, cholesky_factor(shape), 0.0};
  // q(A^-1 x) / q(x) = |P A^-1 P^-1 y|^2 / |y|^2 with y = P x.
  const Matrix c = e.factor * params.matrix.inverse() * e.factor.inverse();
  const double s = c.operator_norm();
  e.contraction_ratio = s * s;
  return e;
}

double default_series_ratio(const DilationParams& params) { return std::sqrt(params.min_modulus); }

Ellipsoid construct_ellipsoid(const DilationParams& params, double r) {
  if (!(r > 1.0 && r < params.min_modulus))
    fail(ErrorCode::InvalidRatio, "series ratio must lie in (1, m_minus)");
  constexpr int kMaxDoublings = 64;
  const int d = params.dimension;
  Matrix step = params.matrix.inverse() * r;  // (r A^-1)^(2^j)
  Matrix sum = Matrix::identity(d);
  bool converged = false;
  for (int j = 0; j < kMaxDoublings; ++j) {
    const Matrix increment = step.transpose() * sum * step;
    sum = sum + increment;
    if (!sum.is_finite()) break;
    if (increment.frobenius() < 1e-12 * sum.frobenius()) {
      converged = true;
      break;
    }
    step = step * step;
  }
  if (!converged) fail(ErrorCode::TruncationFailure, "ellipsoid series did not converge");
  if (d == 2) {
    const double off = 0.5 * (sum(0, 1) + sum(1, 0));
    sum(0, 1) = off;
    sum(1, 0) = off;
  }
  const double omega = unit_ball_volume(d);
  const double scale = std::pow(omega * omega / sum.det(), 1.0 / d);
  return make_ellipsoid(params, sum * scale);
}

std::vector<Point> Rectangle::vertices() const {
  if (dim == 1) return {Point{half_widths[0], 0.0}, Point{-half_widths[0], 0.0}};
  const double a = half_widths[0], b = half_widths[1];
  // Counter-clockwise, so linear images stay convex polygons in order.
  return {Point{a, b}, Point{-a, b}, Point{-a, -b}, Point{a, -b}};
}

double Rectangle::volume() const noexcept {
  return dim == 1 ? 2.0 * half_widths[0] : 4.0 * half_widths[0] * half_widths[1];
}

Rectangle bounding_rectangle(const Ellipsoid& ellipsoid) {
  const Matrix inv = ellipsoid.shape.inverse();
  Rectangle r;
  r.dim = ellipsoid.shape.dim();
  r.half_widths[0] = std::sqrt(inv(0, 0));
  if (r.dim == 2) r.half_widths[1] = std::sqrt(inv(1, 1));
  return r;
}

int covering_exponent(const DilationParams& params, const Ellipsoid& ellipsoid,
                      const Rectangle& rectangle) {
  const Matrix inv = params.matrix.inverse();
  std::vector<Point> verts = rectangle.vertices();
  for (int m = 0; m < 4096; ++m) {
    bool inside = true;
    for (const Point& v : verts)
      if (ellipsoid.q(v) > 1.0 + 1e-12) inside = false;
    if (inside) return m;
    for (Point& v : verts) v = inv * v;
  }
  fail(ErrorCode::InvalidArgument, "covering exponent search did not terminate");
}

QuasiNormContext::QuasiNormContext(DilationParams params, Ellipsoid ellipsoid, int cache_span)
    : params_(std::move(params)), ellipsoid_(std::move(ellipsoid)), span_(cache_span) {
  powers_.assign(2 * span_ + 1, Matrix::identity(params_.dimension));
  const Matrix inv = params_.matrix.inverse();
  for (int k = 1; k <= span_; ++k) {
    powers_[span_ + k] = powers_[span_ + k - 1] * params_.matrix;
    powers_[span_ - k] = powers_[span_ - k + 1] * inv;
  }
}

Matrix QuasiNormContext::power(int k) const {
  if (std::abs(k) <= span_) return powers_[span_ + k];
  Matrix result = Matrix::identity(params_.dimension);
  const int sign = k > 0 ? 1 : -1;
  int remaining = std::abs(k);
  while (remaining > 0) {
    const int chunk = std::min(remaining, span_);
    result = powers_[span_ + sign * chunk] * result;
    remaining -= chunk;
  }
  return result;
}

Point QuasiNormContext::apply_power(int k, const Point& x) const {
  if (std::abs(k) <= span_) return powers_[span_ + k] * x;
  Point y = x;
  const int sign = k > 0 ? 1 : -1;
  int remaining = std::abs(k);
  while (remaining > 0) {
    const int chunk = std::min(remaining, span_);
    y = powers_[span_ + sign * chunk] * y;
    remaining -= chunk;
  }
  return y;
}

double QuasiNormContext::level(int k, const Point& x) const {
  return ellipsoid_.q(apply_power(-k, x));
}

int QuasiNormContext::scale_index(const Point& x) const {
  const int d = dim();
  if (!std::isfinite(x[0]) || (d == 2 && !std::isfinite(x[1])))
    fail(ErrorCode::InvalidArgument, "scale_index of a non-finite point");
  const double q0 = ellipsoid_.q(x);
  if (!(q0 > 0.0)) fail(ErrorCode::InvalidArgument, "scale_index is undefined at the origin");
  const double zeta = 0.5 * (params_.zeta_minus + params_.zeta_plus);
  double guess = std::log(q0) / std::log(b()) / (2.0 * zeta);
  guess = std::clamp(guess, -1.0e6, 1.0e6);
  int k = static_cast<int>(std::lround(guess));
  while (level(k, x) < 1.0) --k;
  while (level(k + 1, x) >= 1.0) ++k;
  return k;
}

double QuasiNormContext::quasi_norm(const Point& x) const {
  if (x[0] == 0.0 && (dim() == 1 || x[1] == 0.0)) return 0.0;
  return std::pow(b(), scale_index(x));
}

GeometryContext GeometryContext::build(const Matrix& matrix, std::optional<double> ratio) {
  DilationParams params = validate_dilation(matrix);
  DilationParams adjoint = validate_dilation(matrix.transpose());
  const double r = ratio.value_or(default_series_ratio(params));
  const double r_star = ratio.value_or(default_series_ratio(adjoint));
  Ellipsoid ell = construct_ellipsoid(params, r);
  Ellipsoid ell_star = construct_ellipsoid(adjoint, r_star);
  const Rectangle rect = bounding_rectangle(ell);
  const Rectangle rect_star = bounding_rectangle(ell_star);
  const int m = covering_exponent(params, ell, rect);
  const int n = covering_exponent(adjoint, ell_star, rect_star);
  return GeometryContext{QuasiNormContext(std::move(params), std::move(ell)),
                         QuasiNormContext(std::move(adjoint), std::move(ell_star)),
                         rect,
                         rect_star,
                         m,
                         n,
                         r,
                         r_star};
}

double growth_bounds(const QuasiNormContext& ctx, std::span<const Point> samples) {
  if (samples.empty()) fail(ErrorCode::EmptySample, "growth_bounds needs at least one sample");
  const double log_b = std::log(ctx.b());
  const double zm = ctx.params().zeta_minus;
  const double zp = ctx.params().zeta_plus;
  double log_c = 0.0;
  for (const Point& x : samples) {
    const int k = ctx.scale_index(x);
    const double log_rho = k * log_b;
    const double log_x = std::log(norm(x, ctx.dim()));
    const double lower_exp = k >= 0 ? zm : zp;
    const double upper_exp = k >= 0 ? zp : zm;
    log_c = std::max(log_c, lower_exp * log_rho - log_x);
    log_c = std::max(log_c, log_x - upper_exp * log_rho);
  }
  return std::exp(log_c);
}

double fit_quasi_triangle(const QuasiNormContext& ctx,
                          std::span<const std::pair<Point, Point>> pairs) {
  if (pairs.empty()) fail(ErrorCode::EmptySample, "fit_quasi_triangle needs at least one pair");
  double c = 0.0;
  for (const auto& [x, y] : pairs) {
    const Point s{x[0] + y[0], x[1] + y[1]};
    const double denom = ctx.quasi_norm(x) + ctx.quasi_norm(y);
    if (denom > 0.0) c = std::max(c, ctx.quasi_norm(s) / denom);
  }
  return c;
}

Cell cell_index(const QuasiNormContext& adjoint, const Rectangle& adjoint_rectangle, int k,
                const Point& x) {
  const Point y = adjoint.apply_power(-k, x);
  Cell alpha{0, 0};
  for (int i = 0; i < adjoint.dim(); ++i)
    alpha[i] = static_cast<long long>(
        std::floor(y[i] / (2.0 * adjoint_rectangle.half_widths[i]) + 0.5));
  return alpha;
}

namespace {

// Projections of a convex polygon onto an axis.
std::pair<double, double> project(const std::vector<Point>& poly, const Point& axis) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const Point& p : poly) {
    const double v = p[0] * axis[0] + p[1] * axis[1];
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

// Separating-axis test for positive-area overlap of two convex polygons.
bool overlaps(const std::vector<Point>& a, const std::vector<Point>& b, double tol) {
  for (const auto* poly : {&a, &b}) {
    const std::size_t n = poly->size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& p = (*poly)[i];
      const Point& q = (*poly)[(i + 1) % n];
      Point axis{-(q[1] - p[1]), q[0] - p[0]};
      const double len = std::hypot(axis[0], axis[1]);
      if (len == 0.0) continue;
      axis = {axis[0] / len, axis[1] / len};
      const auto [alo, ahi] = project(a, axis);
      const auto [blo, bhi] = project(b, axis);
      if (std::min(ahi, bhi) - std::max(alo, blo) <= tol) return false;
    }
  }
  return true;
}

}  // namespace

int shell_cover_count(const QuasiNormContext& adjoint, const Rectangle& adjoint_rectangle, int N,
                      int l) {
  // Work in lattice coordinates at scale l - N, where cells are R*(alpha).
  std::vector<Point> outer;
  for (const Point& v : adjoint_rectangle.vertices())
    outer.push_back(adjoint.apply_power(-(l - N), adjoint.apply_power(l, v)));
  const auto& h = adjoint_rectangle.half_widths;
  const double tol = 1e-9 * std::min(h[0], adjoint.dim() == 2 ? h[1] : h[0]);

  std::array<long long, 2> lo{0, 0}, hi{0, 0};
  for (int i = 0; i < adjoint.dim(); ++i) {
    double mn = 0.0, mx = 0.0;
    for (const Point& p : outer) {
      mn = std::min(mn, p[i]);
      mx = std::max(mx, p[i]);
    }
    lo[i] = static_cast<long long>(std::floor(mn / (2.0 * h[i]) + 0.5)) - 1;
    hi[i] = static_cast<long long>(std::floor(mx / (2.0 * h[i]) + 0.5)) + 1;
  }

  int count = 0;
  if (adjoint.dim() == 1) {
    double mn = std::min(outer[0][0], outer[1][0]);
    double mx = std::max(outer[0][0], outer[1][0]);
    for (long long a = lo[0]; a <= hi[0]; ++a) {
      if (a == 0) continue;
      const double c0 = 2.0 * h[0] * a - h[0], c1 = 2.0 * h[0] * a + h[0];
      if (std::min(mx, c1) - std::max(mn, c0) > tol) ++count;
    }
    return count;
  }
  for (long long a0 = lo[0]; a0 <= hi[0]; ++a0) {
    for (long long a1 = lo[1]; a1 <= hi[1]; ++a1) {
      if (a0 == 0 && a1 == 0) continue;
      const double cx = 2.0 * h[0] * a0, cy = 2.0 * h[1] * a1;
      const std::vector<Point> cell{{cx + h[0], cy + h[1]},
                                    {cx - h[0], cy + h[1]},
                                    {cx - h[0], cy - h[1]},
                                    {cx + h[0], cy - h[1]}};
      if (overlaps(outer, cell, tol)) ++count;
    }
  }
  return count;
}

}  // namespace aniso
