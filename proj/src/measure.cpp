#include "aniso/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "aniso/error.hpp"
#include "aniso/numerics.hpp"

namespace aniso {

PointMeasure PointMeasure::make(int dim, std::vector<Point> points, std::vector<double> weights) {
  if (dim != 1 && dim != 2) fail(ErrorCode::UnsupportedDimension, "measure dimension must be 1 or 2");
  if (points.size() != weights.size())
    fail(ErrorCode::InvalidArgument, "points and weights differ in length");
  for (std::size_t i = 0; i < points.size(); ++i) {
    Point& x = points[i];
    if (dim == 1) x[1] = 0.0;
    if (!std::isfinite(x[0]) || !std::isfinite(x[1]))
      fail(ErrorCode::InvalidArgument, "measure point is not finite");
    if (x[0] == 0.0 && x[1] == 0.0)
      fail(ErrorCode::InvalidArgument, "measure point at the origin");
    if (!(weights[i] >= 0.0) || !std::isfinite(weights[i]))
      fail(ErrorCode::InvalidArgument, "measure weight must be finite and nonnegative");
  }
  return PointMeasure{dim, std::move(points), std::move(weights)};
}

double PointMeasure::total_mass() const {
  CompensatedSum s;
  for (double w : weights) s.add(w);
  return s.value();
}

PointMeasure PointMeasure::scaled(double t) const {
  PointMeasure out = *this;
  for (double& w : out.weights) w *= t;
  return out;
}

namespace {

void check_dims(const PointMeasure& mu, int dim) {
  if (!mu.points.empty() && mu.dim != dim)
    fail(ErrorCode::InvalidArgument, "measure and matrix dimensions differ");
}

}  // namespace

std::map<Cell, double> bin_measure(const PointMeasure& mu, const GeometryContext& ctx, int k) {
  check_dims(mu, ctx.dim());
  std::map<Cell, CompensatedSum> bins;
  for (std::size_t i = 0; i < mu.size(); ++i)
    bins[cell_index(ctx.adjoint, ctx.adjoint_rectangle, k, mu.points[i])].add(mu.weights[i]);
  std::map<Cell, double> out;
  for (const auto& [cell, sum] : bins) out.emplace(cell, sum.value());
  return out;
}

double criterion_sum(const PointMeasure& mu, const GeometryContext& ctx, int k, double q) {
  if (!(q >= 1.0) || !std::isfinite(q)) fail(ErrorCode::InvalidExponent, "q must be finite and >= 1");
  const auto bins = bin_measure(mu, ctx, k);
  double largest = 0.0;
  for (const auto& [cell, mass] : bins)
    if (cell != Cell{0, 0}) largest = std::max(largest, mass);
  if (largest == 0.0) return 0.0;
  // Scaling by the largest mass keeps every term in [0, 1].
  CompensatedSum s;
  for (const auto& [cell, mass] : bins)
    if (cell != Cell{0, 0}) s.add(std::pow(mass / largest, q));
  return largest * std::pow(s.value(), 1.0 / q);
}

namespace {

void check_range(int k_min, int k_max) {
  if (k_min > k_max) fail(ErrorCode::InvalidRange, "k_min exceeds k_max");
}

void finish_report(CriterionReport& r) {
  bool first = true;
  for (const auto& [k, v] : r.per_k) {
    if (first || v > r.sup_value) {
      r.sup_value = v;
      r.argmax_k = k;
      first = false;
    }
  }
  r.interior = r.k_min == r.k_max || (r.argmax_k != r.k_min && r.argmax_k != r.k_max) ||
               r.sup_value == 0.0;
}

}  // namespace

CriterionReport criterion_sup(const PointMeasure& mu, const GeometryContext& ctx, int k_min,
                              int k_max, double p) {
  if (!(p >= 1.0 && p < 2.0)) fail(ErrorCode::InvalidExponent, "lattice criterion needs 1 <= p < 2");
  check_range(k_min, k_max);
  CriterionReport r;
  r.mode = "lattice";
  r.p = p;
  r.q = 2.0 / (2.0 - p);
  r.k_min = k_min;
  r.k_max = k_max;
  std::vector<double> values(static_cast<std::size_t>(k_max - k_min) + 1);
  parallel_for(values.size(), [&](std::size_t i) {
    values[i] = criterion_sum(mu, ctx, k_min + static_cast<int>(i), r.q);
  });
  for (std::size_t i = 0; i < values.size(); ++i) r.per_k[k_min + static_cast<int>(i)] = values[i];
  finish_report(r);
  return r;
}

double annulus_mass(const PointMeasure& mu, const QuasiNormContext& adjoint, int k) {
  check_dims(mu, adjoint.dim());
  CompensatedSum s;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (adjoint.scale_index(mu.points[i]) == k) s.add(mu.weights[i]);
  return s.value();
}

CriterionReport annulus_report(const PointMeasure& mu, const QuasiNormContext& adjoint, int k_min,
                               int k_max, double p) {
  check_range(k_min, k_max);
  check_dims(mu, adjoint.dim());
  CriterionReport r;
  r.mode = "annulus";
  r.p = p;
  r.q = 1.0;
  r.k_min = k_min;
  r.k_max = k_max;
  std::map<int, CompensatedSum> shells;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const int k = adjoint.scale_index(mu.points[i]);
    if (k >= k_min && k <= k_max) shells[k].add(mu.weights[i]);
  }
  for (int k = k_min; k <= k_max; ++k) {
    auto it = shells.find(k);
    r.per_k[k] = it == shells.end() ? 0.0 : it->second.value();
  }
  finish_report(r);
  return r;
}

double annulus_sup(const PointMeasure& mu, const QuasiNormContext& adjoint, int k_min, int k_max) {
  return annulus_report(mu, adjoint, k_min, k_max).sup_value;
}

CriterionReport criterion_report(const PointMeasure& mu, const GeometryContext& ctx, int k_min,
                                 int k_max, double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) fail(ErrorCode::InvalidExponent, "p must be finite and >= 1");
  if (p < 2.0) return criterion_sup(mu, ctx, k_min, k_max, p);
  return annulus_report(mu, ctx.adjoint, k_min, k_max, p);
}

PointMeasure discretize_density(double gamma, const QuasiNormContext& adjoint, int k_min,
                                int k_max, int samples_per_shell, std::uint64_t seed) {
  check_range(k_min, k_max);
  if (samples_per_shell < 1) fail(ErrorCode::InvalidRange, "samples_per_shell must be >= 1");
  if (!std::isfinite(gamma)) fail(ErrorCode::InvalidArgument, "gamma must be finite");
  const int d = adjoint.dim();
  const double b = adjoint.b();
  const Matrix to_ellipsoid = adjoint.ellipsoid().factor.inverse();  // unit ball -> Delta*
  const Matrix& a_star = adjoint.params().matrix;
  LowDiscrepancy seq(d, seed);

  // Points are drawn in the base shell A* Delta* minus Delta* and mapped out
  // by (A*)^k; the sequence continues across shells.
  PointMeasure mu;
  mu.dim = d;
  const std::size_t total = static_cast<std::size_t>(k_max - k_min + 1) * samples_per_shell;
  mu.points.reserve(total);
  mu.weights.reserve(total);
  for (int k = k_min; k <= k_max; ++k) {
    const double weight = std::pow(b, (1.0 - gamma) * k) * (b - 1.0) / samples_per_shell;
    int accepted = 0;
    while (accepted < samples_per_shell) {
      const auto u = seq.next();
      Point ball{};
      if (d == 1) {
        ball = {2.0 * u[0] - 1.0, 0.0};
        if (std::abs(ball[0]) > 1.0 - 1e-9) continue;
      } else {
        const double radius = std::sqrt(u[0]);
        if (radius > 1.0 - 1e-9) continue;
        const double angle = 2.0 * std::numbers::pi * u[1];
        ball = {radius * std::cos(angle), radius * std::sin(angle)};
      }
      const Point x = a_star * (to_ellipsoid * ball);
      if (adjoint.ellipsoid().q(x) < 1.0 + 1e-9) continue;
      const Point y = adjoint.apply_power(k, x);
      if (adjoint.scale_index(y) != k) continue;  // rounding at a shell boundary
      mu.points.push_back(y);
      mu.weights.push_back(weight);
      ++accepted;
    }
  }
  return mu;
}

}  // namespace aniso
