#include "aniso/hardy.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "aniso/error.hpp"
#include "aniso/numerics.hpp"

namespace aniso {

EtaSpec make_eta_spec(const QuasiNormContext& adjoint) {
  EtaSpec s;
  s.rho = adjoint.ellipsoid().contraction_ratio;
  s.s_out = 1.0 / s.rho;
  return s;
}

double eta(const QuasiNormContext& adjoint, const EtaSpec& spec, const Point& xi) {
  const double q0 = adjoint.ellipsoid().q(xi);
  if (q0 <= spec.rho) return 0.0;
  const double q1 = adjoint.level(1, xi);
  const double outer = 1.0 - smooth_step((q1 - 1.0) / (spec.s_out - 1.0));
  if (outer == 0.0) return 0.0;
  return outer * smooth_step((q0 - spec.rho) / (1.0 - spec.rho));
}

namespace {

bool is_origin(const Point& xi, int dim) { return xi[0] == 0.0 && (dim == 1 || xi[1] == 0.0); }

// eta((A*)^-m xi) for m = s-2 .. s+2, where s is the scale index of xi.
// Only m in s-1 .. s+1 can be nonzero; the window leaves a margin.
struct Dilates {
  int s = 0;
  std::array<double, 5> values{};
  double sum = 0.0;
};

Dilates dilates(const QuasiNormContext& adjoint, const EtaSpec& spec, const Point& xi) {
  Dilates d;
  d.s = adjoint.scale_index(xi);
  CompensatedSum total;
  for (int i = 0; i < 5; ++i) {
    d.values[i] = eta(adjoint, spec, adjoint.apply_power(-(d.s - 2 + i), xi));
    total.add(d.values[i]);
  }
  d.sum = total.value();
  return d;
}

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// In-place unnormalized FFT over the grid shape; sign is FFTW_FORWARD or
// FFTW_BACKWARD.
void fft(std::vector<std::complex<double>>& data, const Grid& g, int sign) {
  int n[2] = {g.extent[0], g.extent[1]};
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft(g.dim, n, p, p, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(plan);
}

// Flat FFT-order index of the natural-order sample (i0, i1).
std::size_t fft_index(const Grid& g, std::size_t natural) {
  const int n0 = g.extent[0], n1 = g.extent[1];
  const int i0 = static_cast<int>(natural / n1);
  const int i1 = static_cast<int>(natural % n1);
  const int f0 = ((i0 - n0 / 2) % n0 + n0) % n0;
  const int f1 = g.dim == 2 ? ((i1 - n1 / 2) % n1 + n1) % n1 : 0;
  return static_cast<std::size_t>(f0) * n1 + f1;
}

std::complex<double> origin_phase(const Grid& spatial, const Point& xi, double sign) {
  const double t = sign * 2.0 * std::numbers::pi *
                   (spatial.origin[0] * xi[0] + (spatial.dim == 2 ? spatial.origin[1] * xi[1] : 0.0));
  return {std::cos(t), std::sin(t)};
}

}  // namespace

double psi_hat(const QuasiNormContext& adjoint, const EtaSpec& spec, const Point& xi) {
  if (is_origin(xi, adjoint.dim())) return 0.0;
  const Dilates d = dilates(adjoint, spec, xi);
  return eta(adjoint, spec, xi) / d.sum;
}

double psi_hat_j(const QuasiNormContext& adjoint, const EtaSpec& spec, int j, const Point& xi) {
  return psi_hat(adjoint, spec, adjoint.apply_power(-j, xi));
}

Grid dual_grid(const Grid& spatial) {
  Grid g;
  g.dim = spatial.dim;
  g.extent = spatial.extent;
  for (int a = 0; a < 2; ++a) {
    const int n = spatial.extent[a];
    g.spacing[a] = a < spatial.dim ? 1.0 / (n * spatial.spacing[a]) : 1.0;
    g.origin[a] = a < spatial.dim ? -(n / 2) * g.spacing[a] : 0.0;
  }
  return g;
}

std::span<const double> LPFamily::multiplier(int j) const {
  if (j < j_min_ || j > j_max_) fail(ErrorCode::InvalidRange, "window index outside the family");
  return windows_[j - j_min_];
}

LPFamily LPFamily::build(const QuasiNormContext& adjoint, const Grid& spatial, int j_min,
                         int j_max) {
  if (j_min > j_max) fail(ErrorCode::InvalidRange, "j_min exceeds j_max");
  if (spatial.dim != adjoint.dim()) fail(ErrorCode::InvalidArgument, "grid and matrix dimensions differ");
  LPFamily fam(adjoint);
  fam.spec_ = make_eta_spec(adjoint);
  fam.spatial_ = spatial;
  fam.frequency_ = dual_grid(spatial);
  fam.j_min_ = j_min;
  fam.j_max_ = j_max;
  const std::size_t size = fam.frequency_.size();
  const int width = j_max - j_min + 1;
  fam.psi_hat_ = SampledFunction(fam.frequency_);
  fam.windows_.assign(width, std::vector<double>(size, 0.0));
  fam.coverage_.assign(size, 0.0);

  constexpr int kNoScale = std::numeric_limits<int>::min();
  std::vector<int> scale(size, kNoScale);
  std::vector<int> overlap(size, 0);
  std::vector<double> defect(size, 0.0);
  const QuasiNormContext& ctx = fam.adjoint_;
  const EtaSpec spec = fam.spec_;
  parallel_for(size, [&](std::size_t i) {
    const Point xi = fam.frequency_.point(i);
    if (is_origin(xi, ctx.dim())) return;
    const Dilates d = dilates(ctx, spec, xi);
    scale[i] = d.s;
    CompensatedSum cover;
    for (int t = 0; t < 5; ++t) {
      const int j = d.s - 2 + t;
      const double w = d.values[t] / d.sum;
      if (d.values[t] != 0.0) ++overlap[i];
      if (j == 0) fam.psi_hat_.values[i] = w;
      if (j >= j_min && j <= j_max) {
        fam.windows_[j - j_min][i] = w;
        cover.add(w);
      }
    }
    fam.coverage_[i] = cover.value();
    if (d.s >= j_min + 3 && d.s <= j_max - 3) {
      // Each term on its own, through the dilated argument.
      CompensatedSum sum;
      for (int j = std::max(j_min, d.s - 2); j <= std::min(j_max, d.s + 2); ++j)
        sum.add(psi_hat_j(ctx, spec, j, xi));
      defect[i] = std::abs(sum.value() - 1.0);
    }
  });

  std::vector<int> counts(width, 0);
  for (std::size_t i = 0; i < size; ++i) {
    if (scale[i] == kNoScale) continue;
    if (scale[i] >= j_min && scale[i] <= j_max) ++counts[scale[i] - j_min];
    if (scale[i] >= j_min + 3 && scale[i] <= j_max - 3) {
      ++fam.band_count_;
      fam.defect_ = std::max(fam.defect_, defect[i]);
    }
    fam.max_overlap_ = std::max(fam.max_overlap_, overlap[i]);
  }
  for (int t = 0; t < width; ++t)
    if (counts[t] < 8)
      fail(ErrorCode::GridTooCoarse,
           "shell " + std::to_string(j_min + t) + " holds " + std::to_string(counts[t]) +
               " grid frequencies (need 8)");
  return fam;
}

std::vector<std::complex<double>> grid_spectrum(const SampledFunction& f) {
  const Grid& g = f.grid;
  std::vector<std::complex<double>> data(f.values.begin(), f.values.end());
  fft(data, g, FFTW_FORWARD);
  const Grid dual = dual_grid(g);
  std::vector<std::complex<double>> out(g.size());
  const double w = g.cell_volume();
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = w * origin_phase(g, dual.point(i), -1.0) * data[fft_index(g, i)];
  return out;
}

SampledFunction synthesize(const Grid& spatial, const std::vector<std::complex<double>>& spectrum) {
  if (spectrum.size() != spatial.size()) fail(ErrorCode::InvalidArgument, "spectrum size mismatch");
  const Grid dual = dual_grid(spatial);
  std::vector<std::complex<double>> data(spatial.size());
  const double w = dual.cell_volume();
  for (std::size_t i = 0; i < data.size(); ++i)
    data[fft_index(spatial, i)] = w * origin_phase(spatial, dual.point(i), 1.0) * spectrum[i];
  fft(data, spatial, FFTW_BACKWARD);
  SampledFunction out(spatial);
  for (std::size_t i = 0; i < data.size(); ++i) out.values[i] = data[i].real();
  return out;
}

SquareFunctionResult square_function(const SampledFunction& f, const LPFamily& family) {
  const Grid& g = family.spatial_grid();
  if (f.grid.dim != g.dim || f.grid.extent != g.extent || f.grid.spacing != g.spacing)
    fail(ErrorCode::InvalidArgument, "function grid differs from the family grid");
  const std::size_t size = g.size();
  std::vector<std::complex<double>> spectrum(f.values.begin(), f.values.end());
  fft(spectrum, g, FFTW_FORWARD);

  // Spectral energy the windows cannot reconstruct.
  const auto coverage = family.coverage();
  CompensatedSum total, leaked;
  for (std::size_t i = 0; i < size; ++i) {
    const double e = std::norm(spectrum[fft_index(g, i)]);
    total.add(e);
    if (coverage[i] < 1.0 - 1e-9) leaked.add(e);
  }
  if (total.value() > 0.0 && leaked.value() > 1e-6 * total.value())
    fail(ErrorCode::SpectralLeak, "spectral energy outside the covered shells: " +
                                      std::to_string(leaked.value() / total.value()));

  SquareFunctionResult r;
  r.g_values = SampledFunction(f.grid);
  std::vector<double> squares(size, 0.0);
  std::vector<std::complex<double>> work(size);
  const double w = g.cell_volume();
  for (int j = family.j_min(); j <= family.j_max(); ++j) {
    const auto window = family.multiplier(j);
    for (std::size_t i = 0; i < size; ++i) {
      const std::size_t fi = fft_index(g, i);
      work[fi] = spectrum[fi] * window[i];
    }
    fft(work, g, FFTW_BACKWARD);
    CompensatedSum l1, l2;
    for (std::size_t i = 0; i < size; ++i) {
      const double v = work[i].real() / static_cast<double>(size);
      squares[i] += v * v;
      l1.add(std::abs(v));
      l2.add(v * v);
    }
    r.piece_l1.push_back(l1.value() * w);
    r.piece_l2sq.push_back(l2.value() * w);
  }
  CompensatedSum norm;
  for (std::size_t i = 0; i < size; ++i) {
    r.g_values.values[i] = std::sqrt(squares[i]);
    norm.add(r.g_values.values[i]);
  }
  r.l1_norm = norm.value() * w;
  return r;
}

double h1_proxy(const SampledFunction& f, const LPFamily& family) {
  return square_function(f, family).l1_norm;
}

}  // namespace aniso
