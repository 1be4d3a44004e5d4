#pragma once

#include <complex>
#include <span>
#include <vector>

#include "aniso/geometry.hpp"
#include "aniso/grid.hpp"

namespace aniso {

// Cutoff thresholds for eta, read off the adjoint ellipsoid. With rho the
// contraction ratio of Q*, eta(xi) = theta_out(q*((A*)^-1 xi)) *
// S((q*(xi) - rho) / (1 - rho)), where theta_out falls from 1 at 1 to 0 at
// s_out = 1/rho and S is the smooth step. Then eta = 1 on A* Delta* minus
// Delta* and eta = 0 off (A*)^2 Delta* minus (A*)^-1 Delta*.
struct EtaSpec {
  double rho = 0.0;
  double s_out = 0.0;
};

EtaSpec make_eta_spec(const QuasiNormContext& adjoint);
double eta(const QuasiNormContext& adjoint, const EtaSpec& spec, const Point& xi);

// eta(xi) / sum_m eta((A*)^-m xi). Zero at the origin.
double psi_hat(const QuasiNormContext& adjoint, const EtaSpec& spec, const Point& xi);
// psi_hat((A*)^-j xi).
double psi_hat_j(const QuasiNormContext& adjoint, const EtaSpec& spec, int j, const Point& xi);

// Littlewood-Paley windows psi_hat_j, j_min <= j <= j_max, sampled on the
// frequency grid dual to a periodic spatial grid (spacing 1/(n h), zero at
// index n/2).
class LPFamily {
 public:
  // Throws GridTooCoarse when a shell in the range holds fewer than 8 grid
  // frequencies, InvalidRange when j_min > j_max.
  static LPFamily build(const QuasiNormContext& adjoint, const Grid& spatial, int j_min, int j_max);

  const QuasiNormContext& adjoint() const noexcept { return adjoint_; }
  const EtaSpec& eta_spec() const noexcept { return spec_; }
  const Grid& spatial_grid() const noexcept { return spatial_; }
  const Grid& frequency_grid() const noexcept { return frequency_; }
  int j_min() const noexcept { return j_min_; }
  int j_max() const noexcept { return j_max_; }

  // psi_hat on the frequency grid.
  const SampledFunction& psi_hat_samples() const noexcept { return psi_hat_; }
  // psi_hat_j on the frequency grid, j within range.
  std::span<const double> multiplier(int j) const;
  // sum over the range of psi_hat_j at each grid frequency.
  std::span<const double> coverage() const noexcept { return coverage_; }

  // max |sum_j psi_hat((A*)^-j xi) - 1| over grid frequencies with
  // b^(j_min+3) <= rho*(xi) <= b^(j_max-3), each term evaluated on its own.
  double partition_defect() const noexcept { return defect_; }
  int band_frequencies() const noexcept { return band_count_; }
  // Largest number of nonzero windows at one grid frequency.
  int max_overlap() const noexcept { return max_overlap_; }

 private:
  LPFamily(QuasiNormContext adjoint) : adjoint_(std::move(adjoint)) {}

  QuasiNormContext adjoint_;
  EtaSpec spec_;
  Grid spatial_;
  Grid frequency_;
  int j_min_ = 0;
  int j_max_ = 0;
  SampledFunction psi_hat_;
  std::vector<std::vector<double>> windows_;
  std::vector<double> coverage_;
  double defect_ = 0.0;
  int band_count_ = 0;
  int max_overlap_ = 0;
};

inline LPFamily build_lp_family(const QuasiNormContext& adjoint, const Grid& spatial, int j_min,
                                int j_max) {
  return LPFamily::build(adjoint, spatial, j_min, j_max);
}

// The frequency grid dual to a periodic spatial grid.
Grid dual_grid(const Grid& spatial);

// Riemann-sum transform of f at every frequency of the dual grid (natural
// order), computed by FFT.
std::vector<std::complex<double>> grid_spectrum(const SampledFunction& f);
// Real part of the inverse of grid_spectrum.
SampledFunction synthesize(const Grid& spatial, const std::vector<std::complex<double>>& spectrum);

struct SquareFunctionResult {
  SampledFunction g_values;
  double l1_norm = 0.0;
  std::vector<double> piece_l1;   // ||Psi_j * f||_1 in j order
  std::vector<double> piece_l2sq; // ||Psi_j * f||_2^2 in j order
};

// Throws SpectralLeak when more than 1e-6 of the spectral energy of f sits
// at frequencies the family does not fully cover.
SquareFunctionResult square_function(const SampledFunction& f, const LPFamily& family);
double h1_proxy(const SampledFunction& f, const LPFamily& family);

}  // namespace aniso
