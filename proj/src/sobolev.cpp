#include "aniso/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "aniso/error.hpp"
#include "aniso/numerics.hpp"

namespace aniso {

namespace {

void check_decay(const SampledFunction& f) {
  const double sup = f.sup_abs();
  if (f.boundary_sup() > 1e-10 * sup)
    fail(ErrorCode::BoundaryLeak, "function does not decay at the grid boundary");
}

void check_same_grid(const SampledFunction& a, const SampledFunction& b) {
  if (a.grid.dim != b.grid.dim || a.grid.extent != b.grid.extent || a.grid.origin != b.grid.origin ||
      a.grid.spacing != b.grid.spacing)
    fail(ErrorCode::InvalidArgument, "derivative samples live on a different grid");
}

long long interval_index(double x, double length) {
  return static_cast<long long>(std::floor(x / length + 0.5));
}

double squared_integral(const SampledFunction& f) {
  CompensatedSum s;
  for (double v : f.values) s.add(v * v);
  return s.value() * f.grid.cell_volume();
}

}  // namespace

SobolevResult1D sobolev_sup_sum_1d(const SampledFunction& f, const SampledFunction& df,
                                   double length) {
  if (f.grid.dim != 1) fail(ErrorCode::InvalidArgument, "expected a one-dimensional grid");
  if (!(length > 0.0)) fail(ErrorCode::InvalidArgument, "interval length must be positive");
  check_same_grid(f, df);
  check_decay(f);
  SobolevResult1D r;
  if (f.sup_abs() == 0.0) return r;

  std::map<long long, double> sups;
  for (int i = 0; i < f.grid.extent[0]; ++i) {
    double& s = sups[interval_index(f.grid.coordinate(0, i), length)];
    s = std::max(s, std::abs(f.at(i)));
  }
  CompensatedSum lhs;
  for (const auto& [alpha, s] : sups) lhs.add(s * s);
  r.lhs = lhs.value();
  r.rhs = squared_integral(f) / length + length * squared_integral(df);
  r.ratio = r.lhs / r.rhs;
  return r;
}

SobolevResult2D sobolev_sup_sum_2d(const SampledFunction& f, const SampledFunction& d1f,
                                   const SampledFunction& d2f, const SampledFunction& d12f,
                                   double length1, double length2) {
  if (f.grid.dim != 2) fail(ErrorCode::InvalidArgument, "expected a two-dimensional grid");
  if (!(length1 > 0.0 && length2 > 0.0))
    fail(ErrorCode::InvalidArgument, "rectangle side lengths must be positive");
  check_same_grid(f, d1f);
  check_same_grid(f, d2f);
  check_same_grid(f, d12f);
  check_decay(f);
  SobolevResult2D r;
  if (f.sup_abs() == 0.0) return r;

  const int n0 = f.grid.extent[0], n1 = f.grid.extent[1];
  std::vector<long long> row(n0), col(n1);
  for (int i = 0; i < n0; ++i) row[i] = interval_index(f.grid.coordinate(0, i), length1);
  for (int j = 0; j < n1; ++j) col[j] = interval_index(f.grid.coordinate(1, j), length2);
  std::map<std::pair<long long, long long>, double> sups;
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j) {
      double& s = sups[{row[i], col[j]}];
      s = std::max(s, std::abs(f.at(i, j)));
    }
  CompensatedSum lhs;
  for (const auto& [alpha, s] : sups) lhs.add(s * s);
  r.lhs = lhs.value();
  const double area = length1 * length2;
  r.terms = {length1 / length2 * squared_integral(d1f), area * squared_integral(d12f),
             length2 / length1 * squared_integral(d2f), squared_integral(f) / area};
  r.ratio = r.lhs / (r.terms[0] + r.terms[1] + r.terms[2] + r.terms[3]);
  return r;
}

}  // namespace aniso
