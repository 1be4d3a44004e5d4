#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "aniso/matrix.hpp"

namespace aniso {

/// Validated expansive (dilation) matrix together with the spectral data the
/// rest of the library needs: b = |det A|, the extreme eigenvalue moduli, the
/// strict bracketing constants lambda_minus < m_minus <= m_plus < lambda_plus
/// and the exponents zeta = ln(lambda) / ln(b).
struct DilationParams {
  Matrix matrix;
  int dimension = 0;
  double det_modulus = 0.0;
  double min_modulus = 0.0;
  double max_modulus = 0.0;
  double lambda_minus = 0.0;
  double lambda_plus = 0.0;
  double zeta_minus = 0.0;
  double zeta_plus = 0.0;
  Matrix adjoint;
};

/// Gap exponent used to make lambda_minus / lambda_plus strictly bracket the
/// eigenvalue moduli.
inline constexpr double kLambdaGap = 1e-3;

/// Spectral radius by the Gelfand formula ||M^(2^m)||^(1/2^m), evaluated with
/// repeated squaring and a running log scale so large powers cannot overflow.
/// Stops after two consecutive steps that move the estimate by less than
/// `rtol` relative, or at `depth`.
double gelfand_spectral_radius(const Matrix& m, int depth = 40, double rtol = 1e-9);

/// Throws NotExpansive, Singular or UnsupportedDimension.
DilationParams validate_dilation(const Matrix& matrix);

/// The open ellipsoid {x : x^T Q x < 1}.
struct Ellipsoid {
  Matrix shape;              // Q, symmetric positive definite
  Matrix factor;             // upper-triangular P with Q = P^T P
  double contraction_ratio;  // max over x != 0 of q(A^-1 x) / q(x)

  double q(const Point& x) const noexcept { return shape.quadratic(x); }
  double volume() const noexcept;
};

/// Wraps an arbitrary SPD shape and measures its contraction ratio under A.
Ellipsoid make_ellipsoid(const DilationParams& params, const Matrix& shape);

/// Default series ratio r = sqrt(m_minus).
double default_series_ratio(const DilationParams& params);

/// Sum of r^(2k) (A^-k)^T A^-k, k >= 0, normalized to unit volume. The series
/// is accumulated by doubling (each step adds as many terms as it already
/// holds) until the Frobenius norm of the increment drops below 1e-12 of the
/// partial sum. Throws InvalidRatio unless 1 < r < m_minus, TruncationFailure
/// if the doubling cap is reached.
Ellipsoid construct_ellipsoid(const DilationParams& params, double r);

/// Volume of the unit ball in dimension d (2 or pi).
double unit_ball_volume(int dim) noexcept;

struct Rectangle {
  int dim = 0;
  std::array<double, 2> half_widths{};

  // 2^d corner points.
  std::vector<Point> vertices() const;
  double volume() const noexcept;
};

/// Smallest axis-aligned box containing the ellipsoid: h_i = sqrt((Q^-1)_ii).
Rectangle bounding_rectangle(const Ellipsoid& ellipsoid);

/// Smallest M >= 0 with A^-M(R) inside the closed ellipsoid, tested at the
/// vertices of R (a convex quadratic attains its maximum over a box there).
int covering_exponent(const DilationParams& params, const Ellipsoid& ellipsoid,
                      const Rectangle& rectangle);

/// Dilation matrix plus its ellipsoid, with cached integer powers of the
/// matrix. Implements the step quasi-norm rho(x) = b^k for x in
/// A^(k+1)(Delta) minus A^k(Delta).
class QuasiNormContext {
 public:
  QuasiNormContext(DilationParams params, Ellipsoid ellipsoid, int cache_span = 64);

  const DilationParams& params() const noexcept { return params_; }
  const Ellipsoid& ellipsoid() const noexcept { return ellipsoid_; }
  int dim() const noexcept { return params_.dimension; }
  double b() const noexcept { return params_.det_modulus; }
  int cache_span() const noexcept { return span_; }

  /// A^k for |k| within the cache span; composed from cached blocks otherwise.
  Matrix power(int k) const;
  Point apply_power(int k, const Point& x) const;

  /// q(A^-k x).
  double level(int k, const Point& x) const;

  /// The unique k with q(A^-(k+1) x) < 1 <= q(A^-k x). Requires x != 0.
  int scale_index(const Point& x) const;
  /// b^k, or 0 at the origin.
  double quasi_norm(const Point& x) const;

 private:
  DilationParams params_;
  Ellipsoid ellipsoid_;
  int span_;
  std::vector<Matrix> powers_;  // index k + span_ holds A^k
};

/// Primal and adjoint quasi-norm systems with their bounding rectangles and
/// covering exponents M (primal) and N (adjoint). This is the geometry every
/// criterion and experiment is phrased in.
struct GeometryContext {
  QuasiNormContext primal;
  QuasiNormContext adjoint;
  Rectangle rectangle;
  Rectangle adjoint_rectangle;
  int M;
  int N;
  double series_ratio;
  double adjoint_series_ratio;

  int dim() const noexcept { return primal.dim(); }
  double b() const noexcept { return primal.b(); }

  /// Builds both systems. `ratio` overrides the default r = sqrt(m_minus)
  /// (the same r is used for A and A*, which share a spectrum).
  static GeometryContext build(const Matrix& matrix, std::optional<double> ratio = std::nullopt);
};

/// Smallest c >= 1 for which the four two-sided growth inequalities between
/// rho(x) and |x| hold on the sample (rho >= 1 uses exponents zeta_minus below
/// and zeta_plus above; rho < 1 swaps them). Throws EmptySample.
double growth_bounds(const QuasiNormContext& ctx, std::span<const Point> samples);

/// Empirical quasi-triangle constant: max rho(x+y) / (rho(x) + rho(y)).
/// Throws EmptySample.
double fit_quasi_triangle(const QuasiNormContext& ctx,
                          std::span<const std::pair<Point, Point>> pairs);

using Cell = std::array<long long, 2>;

/// Lattice cell alpha of the translated rectangles (A*)^k(R*(alpha)):
/// y = (A*)^-k x, alpha_i = floor(y_i / (2 h_i) + 1/2). The left edge of each
/// cell belongs to it.
Cell cell_index(const QuasiNormContext& adjoint, const Rectangle& adjoint_rectangle, int k,
                const Point& x);

/// Number of cells (A*)^(l-N)(R*(alpha)), alpha != 0, that overlap the region
/// (A*)^l(R*) minus (A*)^(l-N)(R*) in a set of positive measure.
int shell_cover_count(const QuasiNormContext& adjoint, const Rectangle& adjoint_rectangle, int N,
                      int l);

}  // namespace aniso
