#pragma once

#include <array>

#include "aniso/grid.hpp"

namespace aniso {

// Sup-sum inequality on the interval lattice I(alpha) = [L alpha - L/2, L alpha + L/2).
// lhs = sum_alpha (grid sup of |f| over I(alpha))^2,
// rhs = (1/L) int |f|^2 + L int |f'|^2, ratio = lhs / rhs (0 when f == 0).
// The inequality holds with constant 2.
struct SobolevResult1D {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

// Throws BoundaryLeak when |f| at the grid ends exceeds 1e-10 sup |f|, and
// InvalidArgument on mismatched grids or L <= 0.
SobolevResult1D sobolev_sup_sum_1d(const SampledFunction& f, const SampledFunction& df,
                                   double length);

// Rectangle lattice Q(alpha) = I1(alpha_1) x I2(alpha_2). Right-hand terms in
// order: |I1|/|I2| int |d1 f|^2, |Q| int |d2 d1 f|^2, |I2|/|I1| int |d2 f|^2,
// 1/|Q| int |f|^2.
struct SobolevResult2D {
  double lhs = 0.0;
  std::array<double, 4> terms{};
  double ratio = 0.0;
};

SobolevResult2D sobolev_sup_sum_2d(const SampledFunction& f, const SampledFunction& d1f,
                                   const SampledFunction& d2f, const SampledFunction& d12f,
                                   double length1, double length2);

}  // namespace aniso
