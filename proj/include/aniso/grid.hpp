#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "aniso/matrix.hpp"

namespace aniso {

// Uniform rectangular grid. Sample (i0, i1) sits at origin + (i0 h0, i1 h1)
// and is stored at flat index i0 * n1 + i1. In one dimension n1 == 1.
struct Grid {
  int dim = 1;
  Point origin{};
  std::array<double, 2> spacing{1.0, 1.0};
  std::array<int, 2> extent{2, 1};

  std::size_t size() const noexcept {
    return static_cast<std::size_t>(extent[0]) * static_cast<std::size_t>(extent[1]);
  }
  double cell_volume() const noexcept { return dim == 1 ? spacing[0] : spacing[0] * spacing[1]; }
  double coordinate(int axis, int i) const noexcept { return origin[axis] + i * spacing[axis]; }
  Point point(std::size_t flat) const noexcept;

  // Grid of n points per axis with spacing h whose sample n/2 sits at zero.
  static Grid centered(int dim, int n, std::array<double, 2> h);
  // Midpoint grid of n cells per axis covering [lo, hi].
  static Grid midpoint(int dim, int n, const Point& lo, const Point& hi);
};

// Real samples on a grid. Integrals use the Riemann sum with weight
// grid.cell_volume().
struct SampledFunction {
  Grid grid;
  std::vector<double> values;

  SampledFunction() = default;
  explicit SampledFunction(Grid g) : grid(g), values(g.size(), 0.0) {}

  double& at(int i0, int i1 = 0) { return values[static_cast<std::size_t>(i0) * grid.extent[1] + i1]; }
  double at(int i0, int i1 = 0) const {
    return values[static_cast<std::size_t>(i0) * grid.extent[1] + i1];
  }

  double integral() const;
  double l1_norm() const;
  double l2_norm() const;
  double lp_norm(double p) const;
  double sup_abs() const;
  // Sup of |f| over the outermost ring of samples.
  double boundary_sup() const;
};

// Riemann-sum transform sum_j f(x_j) exp(-2 pi i x_j . xi) * cell_volume at
// arbitrary frequencies. The phase factors separate per axis, so one
// frequency costs O(n0 n1) multiply-adds.
std::vector<std::complex<double>> fourier_at(const SampledFunction& f, std::span<const Point> xi);

}  // namespace aniso
