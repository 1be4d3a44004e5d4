#include "aniso/grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "aniso/error.hpp"
#include "aniso/numerics.hpp"

namespace aniso {

Point Grid::point(std::size_t flat) const noexcept {
  const int n1 = extent[1];
  const int i0 = static_cast<int>(flat / n1);
  const int i1 = static_cast<int>(flat % n1);
  return dim == 1 ? Point{coordinate(0, i0), 0.0} : Point{coordinate(0, i0), coordinate(1, i1)};
}

Grid Grid::centered(int dim, int n, std::array<double, 2> h) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "grid needs at least 2 points per axis");
  Grid g;
  g.dim = dim;
  g.spacing = {h[0], dim == 2 ? h[1] : 1.0};
  g.extent = {n, dim == 2 ? n : 1};
  g.origin = {-(n / 2) * h[0], dim == 2 ? -(n / 2) * h[1] : 0.0};
  return g;
}

Grid Grid::midpoint(int dim, int n, const Point& lo, const Point& hi) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "grid needs at least 2 points per axis");
  Grid g;
  g.dim = dim;
  g.extent = {n, dim == 2 ? n : 1};
  for (int a = 0; a < dim; ++a) {
    g.spacing[a] = (hi[a] - lo[a]) / n;
    g.origin[a] = lo[a] + 0.5 * g.spacing[a];
  }
  return g;
}

double SampledFunction::integral() const {
  CompensatedSum s;
  for (double v : values) s.add(v);
  return s.value() * grid.cell_volume();
}

double SampledFunction::l1_norm() const {
  CompensatedSum s;
  for (double v : values) s.add(std::abs(v));
  return s.value() * grid.cell_volume();
}

double SampledFunction::l2_norm() const {
  CompensatedSum s;
  for (double v : values) s.add(v * v);
  return std::sqrt(s.value() * grid.cell_volume());
}

double SampledFunction::lp_norm(double p) const {
  const double m = sup_abs();
  if (m == 0.0) return 0.0;
  CompensatedSum s;
  for (double v : values) s.add(std::pow(std::abs(v) / m, p));
  return m * std::pow(s.value() * grid.cell_volume(), 1.0 / p);
}

double SampledFunction::sup_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

double SampledFunction::boundary_sup() const {
  const int n0 = grid.extent[0], n1 = grid.extent[1];
  double m = 0.0;
  if (grid.dim == 1) return std::max(std::abs(at(0)), std::abs(at(n0 - 1)));
  for (int i = 0; i < n0; ++i) m = std::max({m, std::abs(at(i, 0)), std::abs(at(i, n1 - 1))});
  for (int j = 0; j < n1; ++j) m = std::max({m, std::abs(at(0, j)), std::abs(at(n0 - 1, j))});
  return m;
}

namespace {

// exp(-2 pi i x_m xi) along one axis. Exact sin/cos at the start of every
// block of 64 samples, times exact in-block rotations, so each phase carries
// a few ulp of error independent of the axis length.
void axis_phases(const Grid& g, int axis, double xi, std::vector<double>& re, std::vector<double>& im) {
  constexpr int kBlock = 64;
  const int n = g.extent[axis];
  const double two_pi = 2.0 * std::numbers::pi;
  re.resize(n);
  im.resize(n);
  std::array<double, kBlock> rot_re{}, rot_im{};
  for (int m = 0; m < kBlock && m < n; ++m) {
    const double t = -two_pi * (m * g.spacing[axis]) * xi;
    rot_re[m] = std::cos(t);
    rot_im[m] = std::sin(t);
  }
  for (int b = 0; b < n; b += kBlock) {
    const double t = -two_pi * g.coordinate(axis, b) * xi;
    const double c = std::cos(t), si = std::sin(t);
    for (int m = 0; m < kBlock && b + m < n; ++m) {
      re[b + m] = c * rot_re[m] - si * rot_im[m];
      im[b + m] = c * rot_im[m] + si * rot_re[m];
    }
  }
}

}  // namespace

std::vector<std::complex<double>> fourier_at(const SampledFunction& f, std::span<const Point> xi) {
  const Grid& g = f.grid;
  const int n0 = g.extent[0], n1 = g.extent[1];
  const double w = g.cell_volume();
  std::vector<std::complex<double>> out(xi.size());
  // Rows that are entirely zero contribute nothing; skipping them is exact.
  std::vector<char> live(n0, 0);
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1 && !live[i]; ++j)
      if (f.at(i, j) != 0.0) live[i] = 1;

  parallel_for(xi.size(), [&](std::size_t s) {
    std::vector<double> re0, im0, re1, im1;
    axis_phases(g, 0, xi[s][0], re0, im0);
    if (g.dim == 2) axis_phases(g, 1, xi[s][1], re1, im1);
    double total_re = 0.0, total_im = 0.0;
    for (int i = 0; i < n0; ++i) {
      if (!live[i]) continue;
      double row_re = 0.0, row_im = 0.0;
      if (g.dim == 2) {
        const double* v = &f.values[static_cast<std::size_t>(i) * n1];
        for (int j = 0; j < n1; ++j) {
          row_re += v[j] * re1[j];
          row_im += v[j] * im1[j];
        }
      } else {
        row_re = f.at(i);
      }
      total_re += row_re * re0[i] - row_im * im0[i];
      total_im += row_re * im0[i] + row_im * re0[i];
    }
    out[s] = {total_re * w, total_im * w};
  });
  return out;
}

}  // namespace aniso
