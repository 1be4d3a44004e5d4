#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "aniso/hardy.hpp"
#include "aniso/measure.hpp"

namespace aniso {

// Smooth random spectrum with Hermitian symmetry, N(-xi) = conj(N(xi)), so
// its inverse transform is real. Built from Gaussian bumps at random centers
// inside the given radius.
class NoiseSpectrum {
 public:
  NoiseSpectrum(int dim, std::uint64_t seed, double radius, int bumps = 8, double width = 0.3);
  std::complex<double> operator()(const Point& xi) const;

 private:
  int dim_;
  double width_;
  std::vector<Point> centers_;
  std::vector<double> even_;
  std::vector<double> odd_;
};

// Smooth annular mask in the value s = q*(eta): zero for s <= 1, rising to 1
// at s = 4, flat to s = 16, zero again from s = 36.
double annular_mask(double s);

// Spectrum noise((A*)^-k xi) * mask((A*)^-k xi), which vanishes on Delta*_k.
std::vector<std::complex<double>> scaled_noise_spectrum(const LPFamily& family, const NoiseSpectrum& noise,
                                                        int k);

// 1/(r' zeta_minus) - (d + 1)/2 with r' = r/(r - 1).
double lambda_threshold(const DilationParams& params, double r);

struct LemmaRow {
  int k = 0;
  double proxy = 0.0;
  double g_norm = 0.0;  // ||g||_r
  double ratio = 0.0;   // proxy / (b^(k/r) ||g||_r)
  double mean = 0.0;    // |integral of f| / ||f||_1
};

struct LemmaReport {
  double lambda = 0.0;
  double r = 2.0;
  double threshold = 0.0;
  std::vector<LemmaRow> rows;
  double spread = 0.0;  // max ratio / min ratio
};

// f = g * chi_check with g^ the scaled noise spectrum and
// chi_(k,lambda)(xi) = (1 - q*((A*)^-k xi))^lambda_+. Throws InvalidExponent
// unless 1 < r < inf, ThresholdViolation when lambda <= lambda_threshold.
LemmaReport lr_lemma_experiment(const LPFamily& family, int k_min, int k_max, double lambda, double r,
                               std::uint64_t seed);
LemmaReport h1_lemma_experiment(const LPFamily& family, int k_min, int k_max, double lambda,
                               std::uint64_t seed);

struct HausdorffYoungReport {
  int trials = 0;
  double worst = 0.0;  // max ||g||_r / ||g^||_r'
};

// Random sums of Gaussian bumps on the grid; norms with grid weights.
HausdorffYoungReport hausdorff_young_check(const Grid& spatial, double r, int trials,
                                           std::uint64_t seed);

struct NecessityRow {
  int l = 0;
  double proxy = 0.0;
  double min_psi = 0.0;  // min of psi_hat_(-l) over sampled shell points
  double pairing = 0.0;  // (sum w |psi_hat_(-l)|^p)^(1/p)
  double annulus = 0.0;  // mu(rho* = b^-l)
  bool bound_ok = false; // annulus^(1/p) <= pairing / min_psi
};

struct NecessityReport {
  std::vector<NecessityRow> rows;
  double median_proxy = 0.0;
  double max_deviation = 0.0;  // max |proxy / median - 1|
  double min_psi = 0.0;
  bool bounds_ok = false;
};

// Test functions Psi_(-l), the inverse transforms of psi_hat((A*)^l xi).
// Throws GridTooCoarse when a window support leaves the covered band.
NecessityReport psi_necessity_test(const LPFamily& family, int l_min, int l_max,
                                   const PointMeasure& mu, double p, int shell_samples,
                                   std::uint64_t seed);

struct SufficiencyRow {
  int k = 0;
  double pairing = 0.0;
  double proxy = 0.0;
  double ratio = 0.0;
  double lp_pieces = 0.0;  // (sum_j ||Psi_j * f||_1^p)^(1/p)
  double l2_pieces = 0.0;  // (sum_j ||Psi_j * f||_1^2)^(1/2)
};

struct PSufficiencyReport {
  double p = 2.0;
  double annulus_sup = 0.0;
  std::vector<SufficiencyRow> rows;
  double max_ratio = 0.0;
  double bound = 0.0;             // 5 annulus_sup^(1/p)
  double identity_defect = 0.0;   // five-term shell identity
  int identity_samples = 0;
  bool monotone_ok = false;
  // Psi_0 test function, shell by shell: pairing restricted to shell l
  // against mu(shell l)^(1/p) sum_(j=-2..2) ||Psi_j * Psi_0||_1.
  double psi0_worst_slack = 0.0;  // max of lhs / rhs over shells
};

PSufficiencyReport p_sufficiency_test(const LPFamily& family, const PointMeasure& mu, double p,
                                      int functions, int shell_samples, std::uint64_t seed);

}  // namespace aniso
