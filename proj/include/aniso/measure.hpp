#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "aniso/geometry.hpp"

namespace aniso {

// Finite weighted point cloud on R^d minus the origin.
struct PointMeasure {
  int dim = 2;
  std::vector<Point> points;
  std::vector<double> weights;

  // Validates lengths, finiteness, nonnegative weights and nonzero points.
  // Throws InvalidArgument.
  static PointMeasure make(int dim, std::vector<Point> points, std::vector<double> weights);

  std::size_t size() const noexcept { return points.size(); }
  double total_mass() const;
  PointMeasure scaled(double t) const;
};

// Masses of the cells (A*)^k(R*(alpha)). The alpha = 0 entry is kept; callers
// that need the off-center sum skip it.
std::map<Cell, double> bin_measure(const PointMeasure& mu, const GeometryContext& ctx, int k);

// (sum over alpha != 0 of mass(alpha)^q)^(1/q), lexicographic alpha order,
// compensated. Throws InvalidExponent for q < 1.
double criterion_sum(const PointMeasure& mu, const GeometryContext& ctx, int k, double q);

struct CriterionReport {
  std::string mode;  // "lattice" for p in [1,2), "annulus" for p >= 2
  double p = 1.0;
  double q = 2.0;    // lattice exponent 2/(2-p); unused in annulus mode
  int k_min = -8;
  int k_max = 8;
  std::map<int, double> per_k;
  double sup_value = 0.0;
  int argmax_k = 0;
  bool interior = true;  // false when the sup sits at an endpoint of a nontrivial range
};

// Lattice criterion with q = 2/(2-p) over [k_min, k_max]. Throws
// InvalidExponent unless 1 <= p < 2 and InvalidRange unless k_min <= k_max.
CriterionReport criterion_sup(const PointMeasure& mu, const GeometryContext& ctx, int k_min,
                              int k_max, double p);

// Weight on the adjoint level set {rho*(x) = b^k}.
double annulus_mass(const PointMeasure& mu, const QuasiNormContext& adjoint, int k);
CriterionReport annulus_report(const PointMeasure& mu, const QuasiNormContext& adjoint, int k_min,
                               int k_max, double p = 2.0);
double annulus_sup(const PointMeasure& mu, const QuasiNormContext& adjoint, int k_min, int k_max);

// Dispatches on p: lattice mode below 2, annulus mode from 2 on.
CriterionReport criterion_report(const PointMeasure& mu, const GeometryContext& ctx, int k_min,
                                 int k_max, double p);

// Discretizes rho*(x)^(-gamma) dx on the adjoint shells k_min..k_max with
// samples_per_shell low-discrepancy points each. Shell k has volume
// b^k (b - 1); every point in it carries that volume times b^(-gamma k)
// divided by samples_per_shell. Throws InvalidRange.
PointMeasure discretize_density(double gamma, const QuasiNormContext& adjoint, int k_min,
                                int k_max, int samples_per_shell, std::uint64_t seed);

}  // namespace aniso
