#include "aniso/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>

#include "aniso/error.hpp"
#include "aniso/numerics.hpp"
#include "aniso/spectral.hpp"

namespace aniso {

NoiseSpectrum::NoiseSpectrum(int dim, std::uint64_t seed, double radius, int bumps, double width)
    : dim_(dim), width_(width) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < bumps; ++i) {
    if (dim == 1) {
      centers_.push_back({uniform(rng, -radius, radius), 0.0});
    } else {
      const double r = radius * std::sqrt(uniform01(rng));
      const double t = 2.0 * std::numbers::pi * uniform01(rng);
      centers_.push_back({r * std::cos(t), r * std::sin(t)});
    }
    even_.push_back(standard_normal(rng));
    odd_.push_back(standard_normal(rng));
  }
}

std::complex<double> NoiseSpectrum::operator()(const Point& xi) const {
  const double denom = 2.0 * width_ * width_;
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < centers_.size(); ++i) {
    const Point& c = centers_[i];
    const Point a{xi[0] - c[0], xi[1] - c[1]};
    const Point b{xi[0] + c[0], xi[1] + c[1]};
    const double ga = std::exp(-dot(a, a, dim_) / denom);
    const double gb = std::exp(-dot(b, b, dim_) / denom);
    re += even_[i] * (ga + gb);
    im += odd_[i] * (ga - gb);
  }
  return {re, im};
}

double annular_mask(double s) {
  if (s <= 1.0 || s >= 36.0) return 0.0;
  return smooth_step((s - 1.0) / 3.0) * (1.0 - smooth_step((s - 16.0) / 20.0));
}

std::vector<std::complex<double>> scaled_noise_spectrum(const LPFamily& family,
                                                        const NoiseSpectrum& noise, int k) {
  const Grid& fg = family.frequency_grid();
  const QuasiNormContext& adj = family.adjoint();
  std::vector<std::complex<double>> out(fg.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Point eta = adj.apply_power(-k, fg.point(i));
    const double m = annular_mask(adj.ellipsoid().q(eta));
    if (m != 0.0) out[i] = m * noise(eta);
  }
  return out;
}

double lambda_threshold(const DilationParams& params, double r) {
  const double r_conj = r / (r - 1.0);
  return 1.0 / (r_conj * params.zeta_minus) - 0.5 * (params.dimension + 1);
}

namespace {

double noise_radius(const QuasiNormContext& adj) {
  const Rectangle rect = bounding_rectangle(adj.ellipsoid());
  return 6.0 * std::max(rect.half_widths[0], rect.half_widths[1]);
}

double spread(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *lo > 0.0 ? *hi / *lo : std::numeric_limits<double>::infinity();
}

double complex_lp(const std::vector<std::complex<double>>& v, double weight, double p) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  if (m == 0.0) return 0.0;
  CompensatedSum s;
  for (const auto& z : v) s.add(std::pow(std::abs(z) / m, p));
  return m * std::pow(s.value() * weight, 1.0 / p);
}

}  // namespace

LemmaReport lr_lemma_experiment(const LPFamily& family, int k_min, int k_max, double lambda, double r,
                               std::uint64_t seed) {
  if (!(r > 1.0) || !std::isfinite(r)) fail(ErrorCode::InvalidExponent, "r must lie in (1, inf)");
  if (k_min > k_max) fail(ErrorCode::InvalidRange, "k_min exceeds k_max");
  const QuasiNormContext& adj = family.adjoint();
  LemmaReport rep;
  rep.lambda = lambda;
  rep.r = r;
  rep.threshold = lambda_threshold(adj.params(), r);
  if (!(lambda > rep.threshold))
    fail(ErrorCode::ThresholdViolation,
         "lambda must exceed " + std::to_string(rep.threshold) + " for r = " + std::to_string(r));

  const Grid& spatial = family.spatial_grid();
  const Grid& fg = family.frequency_grid();
  const NoiseSpectrum noise(adj.dim(), seed, noise_radius(adj));
  std::vector<double> ratios;
  for (int k = k_min; k <= k_max; ++k) {
    std::vector<std::complex<double>> g_hat(fg.size()), chi(fg.size());
    for (std::size_t i = 0; i < fg.size(); ++i) {
      const Point eta = adj.apply_power(-k, fg.point(i));
      // One value of q* decides both supports, so they are disjoint on the grid.
      const double s = adj.ellipsoid().q(eta);
      if (s < 1.0) {
        chi[i] = std::pow(1.0 - s, lambda);
      } else {
        const double m = annular_mask(s);
        if (m != 0.0) g_hat[i] = m * noise(eta);
      }
    }
    const SampledFunction g = synthesize(spatial, g_hat);
    const SampledFunction chi_check = synthesize(spatial, chi);
    SampledFunction f(spatial);
    for (std::size_t i = 0; i < f.values.size(); ++i) f.values[i] = g.values[i] * chi_check.values[i];

    LemmaRow row;
    row.k = k;
    row.proxy = h1_proxy(f, family);
    row.g_norm = g.lp_norm(r);
    row.ratio = row.proxy / (std::pow(adj.b(), k / r) * row.g_norm);
    const double l1 = f.l1_norm();
    row.mean = l1 > 0.0 ? std::abs(f.integral()) / l1 : 0.0;
    rep.rows.push_back(row);
    ratios.push_back(row.ratio);
  }
  rep.spread = spread(ratios);
  return rep;
}

LemmaReport h1_lemma_experiment(const LPFamily& family, int k_min, int k_max, double lambda,
                               std::uint64_t seed) {
  return lr_lemma_experiment(family, k_min, k_max, lambda, 2.0, seed);
}

HausdorffYoungReport hausdorff_young_check(const Grid& spatial, double r, int trials,
                                           std::uint64_t seed) {
  if (!(r >= 2.0) || !std::isfinite(r)) fail(ErrorCode::InvalidExponent, "Hausdorff-Young needs r >= 2");
  const double r_conj = r / (r - 1.0);
  const Grid dual = dual_grid(spatial);
  std::mt19937_64 rng(seed);
  HausdorffYoungReport rep;
  std::array<double, 2> span{};
  for (int a = 0; a < spatial.dim; ++a) span[a] = spatial.extent[a] * spatial.spacing[a];
  for (int t = 0; t < trials; ++t) {
    SampledFunction g(spatial);
    const int bumps = 1 + static_cast<int>(uniform01(rng) * 4.0);
    for (int m = 0; m < bumps; ++m) {
      Point c{};
      std::array<double, 2> width{};
      for (int a = 0; a < spatial.dim; ++a) {
        c[a] = spatial.origin[a] + span[a] * uniform(rng, 0.3, 0.7);
        width[a] = span[a] * uniform(rng, 0.005, 0.05);
      }
      const double amp = standard_normal(rng);
      for (std::size_t i = 0; i < g.values.size(); ++i) {
        const Point x = spatial.point(i);
        double e = 0.0;
        for (int a = 0; a < spatial.dim; ++a) e += (x[a] - c[a]) * (x[a] - c[a]) / (2.0 * width[a] * width[a]);
        g.values[i] += amp * std::exp(-e);
      }
    }
    const auto spectrum = grid_spectrum(g);
    const double lhs = g.lp_norm(r);
    const double rhs = complex_lp(spectrum, dual.cell_volume(), r_conj);
    rep.worst = std::max(rep.worst, lhs / rhs);
    ++rep.trials;
  }
  return rep;
}

NecessityReport psi_necessity_test(const LPFamily& family, int l_min, int l_max,
                                   const PointMeasure& mu, double p, int shell_samples,
                                   std::uint64_t seed) {
  if (!(p >= 2.0) || !std::isfinite(p)) fail(ErrorCode::InvalidExponent, "necessity test needs p >= 2");
  if (l_min > l_max) fail(ErrorCode::InvalidRange, "l_min exceeds l_max");
  // Psi_(-l) lives on shells -l-1 .. -l+1, which must be fully covered.
  if (-l_max - 1 < family.j_min() + 1 || -l_min + 1 > family.j_max() - 1)
    fail(ErrorCode::GridTooCoarse, "l range leaves the covered band of the family");
  const QuasiNormContext& adj = family.adjoint();
  const EtaSpec& spec = family.eta_spec();
  const Grid& fg = family.frequency_grid();
  const auto base = base_shell_points(adj, shell_samples, seed);

  NecessityReport rep;
  rep.bounds_ok = true;
  rep.min_psi = std::numeric_limits<double>::infinity();
  std::vector<double> proxies;
  for (int l = l_min; l <= l_max; ++l) {
    std::vector<std::complex<double>> spectrum(fg.size());
    for (std::size_t i = 0; i < fg.size(); ++i)
      spectrum[i] = psi_hat(adj, spec, adj.apply_power(l, fg.point(i)));
    const SampledFunction f = synthesize(family.spatial_grid(), spectrum);

    NecessityRow row;
    row.l = l;
    row.proxy = h1_proxy(f, family);
    // Shell (A*)^(-l+1) Delta* minus (A*)^-l Delta*: base points and any
    // measure points there.
    row.min_psi = std::numeric_limits<double>::infinity();
    for (const Point& x : base)
      row.min_psi = std::min(row.min_psi, psi_hat(adj, spec, adj.apply_power(l, adj.apply_power(-l, x))));
    CompensatedSum pair;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      const double v = psi_hat(adj, spec, adj.apply_power(l, mu.points[i]));
      if (adj.scale_index(mu.points[i]) == -l) row.min_psi = std::min(row.min_psi, v);
      pair.add(mu.weights[i] * std::pow(v, p));
    }
    row.pairing = std::pow(pair.value(), 1.0 / p);
    row.annulus = annulus_mass(mu, adj, -l);
    row.bound_ok = std::pow(row.annulus, 1.0 / p) <= row.pairing / row.min_psi * (1.0 + 1e-12);
    rep.bounds_ok = rep.bounds_ok && row.bound_ok;
    rep.min_psi = std::min(rep.min_psi, row.min_psi);
    proxies.push_back(row.proxy);
    rep.rows.push_back(row);
  }
  std::vector<double> sorted = proxies;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  rep.median_proxy = n % 2 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  for (double v : proxies) rep.max_deviation = std::max(rep.max_deviation, std::abs(v / rep.median_proxy - 1.0));
  return rep;
}

PSufficiencyReport p_sufficiency_test(const LPFamily& family, const PointMeasure& mu, double p,
                                      int functions, int shell_samples, std::uint64_t seed) {
  if (!(p >= 2.0) || !std::isfinite(p)) fail(ErrorCode::InvalidExponent, "p-sufficiency needs p >= 2");
  if (family.j_min() > -2 - 1 || family.j_max() < 2 + 1)
    fail(ErrorCode::GridTooCoarse, "family must cover shells -3 .. 3");
  const QuasiNormContext& adj = family.adjoint();
  const EtaSpec& spec = family.eta_spec();
  const Grid& spatial = family.spatial_grid();
  const Grid& fg = family.frequency_grid();

  PSufficiencyReport rep;
  rep.p = p;
  int s_lo = 0, s_hi = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const int s = adj.scale_index(mu.points[i]);
    s_lo = i == 0 ? s : std::min(s_lo, s);
    s_hi = i == 0 ? s : std::max(s_hi, s);
  }
  rep.annulus_sup = mu.size() ? annulus_sup(mu, adj, s_lo, s_hi) : 0.0;
  rep.bound = 5.0 * std::pow(rep.annulus_sup, 1.0 / p);

  rep.monotone_ok = true;
  const double radius = noise_radius(adj);
  for (int t = 0; t < functions; ++t) {
    const int k = t % 5 - 2;
    const NoiseSpectrum noise(adj.dim(), seed + 1000 + t, radius);
    const SampledFunction f = synthesize(spatial, scaled_noise_spectrum(family, noise, k));
    const SquareFunctionResult sq = square_function(f, family);
    SufficiencyRow row;
    row.k = k;
    row.proxy = sq.l1_norm;
    row.pairing = pair_against_measure(f, mu, p);
    row.ratio = row.proxy > 0.0 ? row.pairing / row.proxy : 0.0;
    CompensatedSum lp, l2;
    for (double a : sq.piece_l1) {
      lp.add(std::pow(a, p));
      l2.add(a * a);
    }
    row.lp_pieces = std::pow(lp.value(), 1.0 / p);
    row.l2_pieces = std::sqrt(l2.value());
    rep.monotone_ok = rep.monotone_ok && row.lp_pieces <= row.l2_pieces * (1.0 + 1e-12);
    rep.max_ratio = std::max(rep.max_ratio, row.ratio);
    rep.rows.push_back(row);
  }

  // Five-term identity on sampled points of each shell
  // (A*)^l Delta* minus (A*)^(l-1) Delta*.
  const auto base = base_shell_points(adj, shell_samples, seed);
  for (int l = family.j_min() + 2; l <= family.j_max() - 2; ++l) {
    for (const Point& x : base) {
      const Point xi = adj.apply_power(l - 1, x);
      CompensatedSum sum;
      for (int j = l - 2; j <= l + 2; ++j) sum.add(psi_hat_j(adj, spec, j, xi));
      rep.identity_defect = std::max(rep.identity_defect, std::abs(sum.value() - 1.0));
      ++rep.identity_samples;
    }
  }

  // Psi_0 shell by shell.
  std::vector<std::complex<double>> spectrum(fg.size());
  for (std::size_t i = 0; i < fg.size(); ++i) spectrum[i] = psi_hat(adj, spec, fg.point(i));
  const SampledFunction psi0 = synthesize(spatial, spectrum);
  const SquareFunctionResult sq0 = square_function(psi0, family);
  double pieces = 0.0;
  for (int j = -2; j <= 2; ++j) pieces += sq0.piece_l1[j - family.j_min()];
  if (mu.size()) {
    const auto values = fourier_at(psi0, mu.points);
    std::map<int, CompensatedSum> shell_pairing;
    for (std::size_t i = 0; i < mu.size(); ++i)
      shell_pairing[adj.scale_index(mu.points[i])].add(mu.weights[i] * std::pow(std::abs(values[i]), p));
    for (const auto& [l, sum] : shell_pairing) {
      const double mass = annulus_mass(mu, adj, l);
      if (mass <= 0.0) continue;
      const double lhs = std::pow(sum.value(), 1.0 / p);
      const double rhs = std::pow(mass, 1.0 / p) * pieces;
      rep.psi0_worst_slack = std::max(rep.psi0_worst_slack, lhs / rhs);
    }
  }
  return rep;
}

}  // namespace aniso
