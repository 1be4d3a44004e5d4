#include "aniso/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "aniso/bessel.hpp"
#include "aniso/error.hpp"
#include "aniso/experiments.hpp"
#include "aniso/geometry.hpp"
#include "aniso/hardy.hpp"
#include "aniso/measure.hpp"
#include "aniso/numerics.hpp"
#include "aniso/sobolev.hpp"
#include "aniso/spectral.hpp"

namespace aniso {

Matrix default_matrix(int dim) {
  if (dim == 1) return Matrix::from_scalar(2.0);
  return Matrix::from_rows(1.5, 0.5, 0.25, 2.0);
}

namespace {

using Metrics = std::map<std::string, double>;

std::string indexed(const std::string& name, long long i) {
  return name + "[" + std::to_string(i) + "]";
}

Matrix matrix_for(const SuiteConfig& cfg, int dim) {
  if (cfg.matrix && cfg.matrix->dim() == dim) return *cfg.matrix;
  return default_matrix(dim);
}

int resolution_for(const SuiteConfig& cfg, int fallback) {
  if (cfg.resolution == 0) return fallback;
  if (cfg.resolution < 64) fail(ErrorCode::InvalidArgument, "resolution must be >= 64");
  return cfg.resolution;
}

bool all_finite(const Metrics& m) {
  return std::all_of(m.begin(), m.end(), [](const auto& kv) { return std::isfinite(kv.second); });
}

double max_over_min(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi / *lo;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

bool raises(ErrorCode code, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

// Hardy-space suites share one 1D family: A = 2, n = 65536, h = 1/64, j in [-7, 5].
LPFamily hardy_family_1d(const SuiteConfig& cfg) {
  const GeometryContext ctx = GeometryContext::build(matrix_for(cfg, 1));
  return LPFamily::build(ctx.adjoint, Grid::centered(1, 65536, {1.0 / 64.0, 1.0}), -7, 5);
}

// ---------------------------------------------------------------------------

SuiteReport atom_decay(const SuiteConfig& cfg) {
  SuiteReport r;
  const GeometryContext ctx = GeometryContext::build(matrix_for(cfg, 2));
  const int res = resolution_for(cfg, 128);
  constexpr int kPerShell = 50;
  constexpr int kShells = 4;
  std::vector<double> ratios;
  bool atoms_ok = true;
  for (int k = -3; k <= 3; ++k) {
    const Atom atom = make_atom(ctx.primal, k, {0.0, 0.0}, cfg.seed, res);
    const AtomCheck check = check_atom(atom, ctx.primal);
    atoms_ok = atoms_ok && check.support_ok && check.sup_ok && check.moment_ok;
    const double ratio = verify_atom_decay(atom, ctx.primal, ctx.adjoint, kPerShell, kShells, cfg.seed);
    r.metrics[indexed("ratio", k)] = ratio;
    ratios.push_back(ratio);
  }
  r.metrics["spread"] = max_over_min(ratios);
  r.metrics["samples_per_scale"] = kPerShell * kShells;
  r.metrics["atoms_valid"] = atoms_ok;
  r.passed = all_finite(r.metrics) && atoms_ok && r.metrics["spread"] <= 2.0;
  return r;
}

// ---------------------------------------------------------------------------

struct Analytic1D {
  std::function<double(double)> f;
  std::function<double(double)> df;
};

std::vector<Analytic1D> sobolev_functions() {
  auto g = [](double c, double x) { return std::exp(-c * x * x); };
  return {
      {[=](double x) { return g(1, x); }, [=](double x) { return -2 * x * g(1, x); }},
      {[=](double x) { return g(0.25, x); }, [=](double x) { return -0.5 * x * g(0.25, x); }},
      {[=](double x) { return x * g(0.5, x); }, [=](double x) { return (1 - x * x) * g(0.5, x); }},
      {[=](double x) { return g(1, x) * std::cos(3 * x); },
       [=](double x) { return g(1, x) * (-2 * x * std::cos(3 * x) - 3 * std::sin(3 * x)); }},
      {[=](double x) { return g(0.5, x - 1) + 0.5 * g(1, x + 2); },
       [=](double x) { return -(x - 1) * g(0.5, x - 1) - (x + 2) * g(1, x + 2); }},
      {[](double x) { return std::exp(-std::pow(x, 4) / 16); },
       [](double x) { return -std::pow(x, 3) / 4 * std::exp(-std::pow(x, 4) / 16); }},
      {[=](double x) { return g(0.5, x) * std::sin(x); },
       [=](double x) { return g(0.5, x) * (std::cos(x) - x * std::sin(x)); }},
      {[=](double x) { return x * x * g(0.5, x); },
       [=](double x) { return (2 * x - x * x * x) * g(0.5, x); }},
      {[=](double x) { return g(0.125, x); }, [=](double x) { return -0.25 * x * g(0.125, x); }},
      {[=](double x) { return g(2, x) * std::cos(5 * x) + 0.3 * g(0.5, x); },
       [=](double x) {
         return g(2, x) * (-4 * x * std::cos(5 * x) - 5 * std::sin(5 * x)) - 0.3 * x * g(0.5, x);
       }},
  };
}

SuiteReport sobolev_1d(const SuiteConfig&) {
  SuiteReport r;
  constexpr int n = 8192;
  constexpr double h = 32.0 / n;
  const Grid grid = Grid::centered(1, n, {h, 1.0});
  // f(2x) on a grid of half the spacing hits the same sample values.
  const Grid half = Grid::centered(1, n, {h / 2, 1.0});
  const auto functions = sobolev_functions();
  double worst = 0.0;
  double invariance = 0.0;
  for (std::size_t t = 0; t < functions.size(); ++t) {
    SampledFunction f(grid), df(grid), fs(half), dfs(half);
    for (int i = 0; i < n; ++i) {
      const double x = grid.coordinate(0, i);
      f.values[i] = functions[t].f(x);
      df.values[i] = functions[t].df(x);
      fs.values[i] = functions[t].f(2.0 * half.coordinate(0, i));
      dfs.values[i] = 2.0 * functions[t].df(2.0 * half.coordinate(0, i));
    }
    double fn_worst = 0.0;
    for (int e = -4; e <= 3; ++e) {
      const double length = std::ldexp(1.0, e);
      const SobolevResult1D a = sobolev_sup_sum_1d(f, df, length);
      const SobolevResult1D b = sobolev_sup_sum_1d(fs, dfs, length / 2.0);
      fn_worst = std::max(fn_worst, a.ratio);
      invariance = std::max(invariance, std::abs(b.ratio - a.ratio) / a.ratio);
    }
    r.metrics[indexed("max_ratio_function", static_cast<long long>(t))] = fn_worst;
    worst = std::max(worst, fn_worst);
  }
  r.metrics["max_ratio"] = worst;
  r.metrics["rescale_deviation"] = invariance;
  r.passed = all_finite(r.metrics) && worst <= 2.0 * 1.05 && invariance <= 1e-9;
  return r;
}

// ---------------------------------------------------------------------------

struct Fields2D {
  SampledFunction f, d1, d2, d12;
};

// f(x) = exp(-x^T C x / 2) sampled at (s x1, t x2), derivatives by the chain rule.
Fields2D correlated_gaussian(const Grid& grid, double s, double t) {
  constexpr double c11 = 2.0, c12 = 0.6, c22 = 1.2;
  Fields2D out{SampledFunction(grid), SampledFunction(grid), SampledFunction(grid), SampledFunction(grid)};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Point p = grid.point(i);
    const double x = s * p[0], y = t * p[1];
    const double u = c11 * x + c12 * y, v = c12 * x + c22 * y;
    const double f = std::exp(-0.5 * (x * u + y * v));
    out.f.values[i] = f;
    out.d1.values[i] = -s * u * f;
    out.d2.values[i] = -t * v * f;
    out.d12.values[i] = s * t * (u * v - c12) * f;
  }
  return out;
}

SuiteReport sobolev_2d(const SuiteConfig&) {
  SuiteReport r;
  constexpr int n = 512;
  constexpr double h = 16.0 / n;
  const Grid grid = Grid::centered(2, n, {h, h});
  const Grid stretched = Grid::centered(2, n, {h / 2.0, h * 2.0});
  const Fields2D base = correlated_gaussian(grid, 1.0, 1.0);
  const Fields2D scaled = correlated_gaussian(stretched, 2.0, 0.5);
  std::vector<double> ratios;
  double invariance = 0.0;
  for (int e1 = -3; e1 <= 3; ++e1) {
    for (int e2 = -3; e2 <= 3; ++e2) {
      const double l1 = std::ldexp(1.0, e1), l2 = std::ldexp(1.0, e2);
      const SobolevResult2D a = sobolev_sup_sum_2d(base.f, base.d1, base.d2, base.d12, l1, l2);
      ratios.push_back(a.ratio);
      if (e1 == e2 || e1 == -3 || e2 == 3) {
        const SobolevResult2D b =
            sobolev_sup_sum_2d(scaled.f, scaled.d1, scaled.d2, scaled.d12, l1 / 2.0, l2 * 2.0);
        invariance = std::max(invariance, std::abs(b.ratio - a.ratio) / a.ratio);
      }
    }
  }
  const double med = median(ratios);
  const double hi = *std::max_element(ratios.begin(), ratios.end());
  const double lo = *std::min_element(ratios.begin(), ratios.end());
  r.metrics["median_ratio"] = med;
  r.metrics["max_ratio"] = hi;
  r.metrics["min_ratio"] = lo;
  r.metrics["max_over_median"] = hi / med;
  r.metrics["rescale_deviation"] = invariance;
  r.passed = all_finite(r.metrics) && hi / med <= 10.0 && invariance <= 1e-9;
  return r;
}

// ---------------------------------------------------------------------------

SuiteReport bochner_riesz(const SuiteConfig& cfg) {
  SuiteReport r;
  double quad_error = 0.0;
  for (double lambda : {1.0, 2.0}) {
    for (double radius : {0.1, 1.0, 10.0}) {
      const double closed = bochner_riesz_kernel(lambda, 1, radius);
      const double quad = bochner_riesz_quadrature(lambda, 1, radius);
      quad_error = std::max(quad_error, std::abs(closed - quad) / std::abs(closed));
    }
  }
  r.metrics["quadrature_rel_error"] = quad_error;

  // |m^v(x)| (1 + |x|^((d+1)/2 + lambda)) over |x| <= 1e3.
  double decay = 0.0;
  for (int d = 1; d <= 2; ++d) {
    for (double lambda : {0.0, 1.0, 2.0}) {
      const double power = 0.5 * (d + 1) + lambda;
      for (int i = 0; i <= 20000; ++i) {
        const double x = 1e3 * i / 20000.0;
        decay = std::max(decay, std::abs(bochner_riesz_kernel(lambda, d, x)) * (1.0 + std::pow(x, power)));
      }
    }
  }
  r.metrics["decay_product_sup"] = decay;

  double branch = 0.0;
  for (int i = 0; i <= 7; ++i) {
    const double nu = 0.5 * i;
    branch = std::max(branch, std::abs(bessel_j_series(nu, kBesselSwitch) -
                                       bessel_j_asymptotic(nu, kBesselSwitch)));
  }
  r.metrics["branch_gap"] = branch;

  const GeometryContext ctx = GeometryContext::build(matrix_for(cfg, 2));
  const int res = resolution_for(cfg, 512);
  const Matrix& P = ctx.adjoint.ellipsoid().factor;
  double chi_error = 0.0;
  bool chi_support = true;
  for (int k = 0; k <= 2; ++k) {
    // Frequencies whose normalized coordinate P^-T A^k xi has radius up to 3.
    const Matrix to_xi = ctx.primal.power(k).inverse() * P.transpose();
    std::vector<Point> freqs;
    for (int i = 0; i < 20; ++i) {
      const double radius = 3.0 * (i + 1) / 20.0;
      const double angle = 2.0 * std::numbers::pi * 0.618033988749895 * i;
      freqs.push_back(to_xi * Point{radius * std::cos(angle), radius * std::sin(angle)});
    }
    const ChiCheck c = chi_transform_check(ctx.adjoint, k, 2.0, freqs, res);
    r.metrics[indexed("chi_error", k)] = c.max_error;
    chi_error = std::max(chi_error, c.max_error);
    chi_support = chi_support && c.support_ok;
  }
  r.metrics["chi_max_error"] = chi_error;
  r.metrics["chi_support_ok"] = chi_support;
  r.passed = all_finite(r.metrics) && quad_error <= 1e-6 && branch <= 1e-8 && chi_error <= 1e-6 &&
             chi_support;
  return r;
}

// ---------------------------------------------------------------------------

struct EtaCertificate {
  bool zero_inside = true;
  bool one_on_shell = true;
};

// Samples (A*)^-1 Delta* and A* Delta* minus Delta*.
EtaCertificate certify_eta(const LPFamily& fam, int count, std::uint64_t seed) {
  EtaCertificate c;
  const QuasiNormContext& adj = fam.adjoint();
  const Matrix inv_p = adj.ellipsoid().factor.inverse();
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    Point u{};
    if (adj.dim() == 1) {
      u = {uniform(rng, -1.0, 1.0), 0.0};
    } else {
      const double rad = std::sqrt(uniform01(rng));
      const double ang = uniform(rng, 0.0, 2.0 * std::numbers::pi);
      u = {rad * std::cos(ang), rad * std::sin(ang)};
    }
    const Point xi = adj.apply_power(-1, inv_p * u);
    if (eta(adj, fam.eta_spec(), xi) != 0.0) c.zero_inside = false;
  }
  for (const Point& xi : base_shell_points(adj, count, seed + 1))
    if (eta(adj, fam.eta_spec(), xi) != 1.0) c.one_on_shell = false;
  return c;
}

SuiteReport partition(const SuiteConfig& cfg) {
  SuiteReport r;
  const LPFamily one = hardy_family_1d(cfg);
  const GeometryContext ctx2 = GeometryContext::build(matrix_for(cfg, 2));
  const LPFamily two = LPFamily::build(ctx2.adjoint, Grid::centered(2, 512, {0.1, 0.1}), -4, 3);
  bool certs = true;
  int overlap = 0;
  double defect = 0.0;
  for (const auto& [tag, fam] : {std::pair<std::string, const LPFamily*>{"1d", &one}, {"2d", &two}}) {
    const EtaCertificate c = certify_eta(*fam, 1000, cfg.seed);
    r.metrics["defect_" + tag] = fam->partition_defect();
    r.metrics["band_frequencies_" + tag] = fam->band_frequencies();
    r.metrics["max_overlap_" + tag] = fam->max_overlap();
    r.metrics["eta_zero_inside_" + tag] = c.zero_inside;
    r.metrics["eta_one_on_shell_" + tag] = c.one_on_shell;
    certs = certs && c.zero_inside && c.one_on_shell && fam->band_frequencies() > 0;
    overlap = std::max(overlap, fam->max_overlap());
    defect = std::max(defect, fam->partition_defect());
  }
  r.metrics["partition_defect"] = defect;
  r.passed = all_finite(r.metrics) && defect <= 1e-10 && certs && overlap <= 4;
  return r;
}

// ---------------------------------------------------------------------------

void record_lemma(SuiteReport& r, const LemmaReport& rep, const std::string& tag) {
  double mean = 0.0;
  for (const LemmaRow& row : rep.rows) {
    r.metrics[indexed("ratio_" + tag, row.k)] = row.ratio;
    mean = std::max(mean, row.mean);
  }
  r.metrics["spread_" + tag] = rep.spread;
  r.metrics["max_mean_" + tag] = mean;
  r.metrics["threshold_" + tag] = rep.threshold;
}

SuiteReport lemma_h1(const SuiteConfig& cfg) {
  SuiteReport r;
  const LPFamily fam = hardy_family_1d(cfg);
  const LemmaReport rep = h1_lemma_experiment(fam, -2, 2, 2.0, cfg.seed);
  record_lemma(r, rep, "r2");
  const bool rejects = raises(ErrorCode::ThresholdViolation,
                              [&] { h1_lemma_experiment(fam, -2, 2, -0.75, cfg.seed); });
  r.metrics["rejects_low_lambda"] = rejects;
  r.passed = all_finite(r.metrics) && rep.spread <= 3.0 && r.metrics["max_mean_r2"] <= 1e-10 && rejects;
  return r;
}

SuiteReport lemma_lr(const SuiteConfig& cfg) {
  SuiteReport r;
  const LPFamily fam = hardy_family_1d(cfg);
  const LemmaReport rep = lr_lemma_experiment(fam, -2, 2, 2.0, 4.0, cfg.seed);
  record_lemma(r, rep, "r4");
  const HausdorffYoungReport hy = hausdorff_young_check(fam.spatial_grid(), 4.0, 20, cfg.seed);
  r.metrics["hausdorff_young_worst"] = hy.worst;
  r.metrics["hausdorff_young_trials"] = hy.trials;
  const bool rejects = raises(ErrorCode::ThresholdViolation,
                              [&] { lr_lemma_experiment(fam, -2, 2, -0.5, 4.0, cfg.seed); });
  r.metrics["rejects_low_lambda"] = rejects;
  r.passed = all_finite(r.metrics) && rep.spread <= 3.0 && r.metrics["max_mean_r4"] <= 1e-10 &&
             hy.worst <= 1.0 + 1e-12 && rejects;
  return r;
}

// ---------------------------------------------------------------------------

PointMeasure random_point_masses(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  std::vector<double> ws;
  for (int i = 0; i < count; ++i) {
    const double mag = std::exp2(uniform(rng, -6.0, 6.0));
    pts.push_back({uniform01(rng) < 0.5 ? -mag : mag, 0.0});
    ws.push_back(uniform(rng, 0.1, 1.0));
  }
  return PointMeasure::make(1, std::move(pts), std::move(ws));
}

SuiteReport psi_necessity(const SuiteConfig& cfg) {
  SuiteReport r;
  const LPFamily fam = hardy_family_1d(cfg);
  const std::vector<std::pair<std::string, PointMeasure>> measures = {
      {"density", discretize_density(1.0, fam.adjoint(), -6, 6, 32, cfg.seed)},
      {"points", random_point_masses(40, cfg.seed + 1)},
      {"density_half", discretize_density(0.5, fam.adjoint(), -6, 6, 32, cfg.seed + 2)},
  };
  bool ok = true;
  for (const auto& [tag, mu] : measures) {
    const NecessityReport rep = psi_necessity_test(fam, -3, 3, mu, 2.0, 64, cfg.seed);
    r.metrics["max_deviation_" + tag] = rep.max_deviation;
    r.metrics["min_psi_" + tag] = rep.min_psi;
    r.metrics["bounds_ok_" + tag] = rep.bounds_ok;
    if (tag == "density") {
      r.metrics["median_proxy"] = rep.median_proxy;
      for (const NecessityRow& row : rep.rows) r.metrics[indexed("proxy", row.l)] = row.proxy;
    }
    ok = ok && rep.max_deviation <= 0.2 && rep.min_psi >= 0.1 && rep.bounds_ok;
  }
  r.passed = all_finite(r.metrics) && ok;
  return r;
}

// ---------------------------------------------------------------------------

// Points (A*)^j xi_i for six unit directions and j in [j_min, j_max], unit weights.
PointMeasure orbit_measure(const QuasiNormContext& adjoint, int j_min, int j_max) {
  std::vector<Point> pts;
  std::vector<double> ws;
  for (int i = 0; i < 6; ++i) {
    const double a = std::numbers::pi * i / 6.0 + 0.1;
    const Point dir{std::cos(a), std::sin(a)};
    for (int j = j_min; j <= j_max; ++j) {
      pts.push_back(adjoint.apply_power(j, dir));
      ws.push_back(1.0);
    }
  }
  return PointMeasure::make(2, std::move(pts), std::move(ws));
}

SuiteReport sufficiency_e2e(const SuiteConfig& cfg) {
  SuiteReport r;
  const GeometryContext ctx = GeometryContext::build(matrix_for(cfg, 2));
  const int res = resolution_for(cfg, 64);
  constexpr int kMin = -8, kMax = 6;
  std::vector<std::pair<std::string, PointMeasure>> measures = {
      {"density", discretize_density(1.0, ctx.adjoint, kMin, kMax, 64, cfg.seed)},
      {"density_105", discretize_density(1.05, ctx.adjoint, kMin, kMax, 64, cfg.seed + 1)},
      {"orbit", orbit_measure(ctx.adjoint, kMin, kMax)},
  };
  for (auto& [tag, mu] : measures) {
    const CriterionReport crit = criterion_sup(mu, ctx, kMin - 4, kMax + 4, 1.0);
    r.metrics["criterion_sup_raw_" + tag] = crit.sup_value;
    mu = mu.scaled(1.0 / crit.sup_value);
  }

  std::mt19937_64 rng(cfg.seed);
  std::vector<Atom> atoms;
  for (int i = 0; i < 50; ++i) {
    const int k = i % 5 - 2;
    const Point center{uniform(rng, -4.0, 4.0), uniform(rng, -4.0, 4.0)};
    atoms.push_back(make_atom(ctx.primal, k, center, cfg.seed + static_cast<std::uint64_t>(i), res));
  }
  bool ok = true;
  for (const auto& [tag, mu] : measures) {
    std::vector<double> values;
    for (const Atom& a : atoms) values.push_back(pair_against_measure(a.carrier, mu, 1.0));
    const double hi = *std::max_element(values.begin(), values.end());
    const double spread = max_over_min(values);
    r.metrics["max_pairing_" + tag] = hi;
    r.metrics["spread_" + tag] = spread;
    ok = ok && std::isfinite(hi) && spread <= 5.0;
  }
  r.passed = all_finite(r.metrics) && ok;
  return r;
}

// ---------------------------------------------------------------------------

SuiteReport p_sufficiency(const SuiteConfig& cfg) {
  SuiteReport r;
  const LPFamily fam = hardy_family_1d(cfg);
  const PointMeasure mu = discretize_density(1.0, fam.adjoint(), -6, 6, 32, cfg.seed);
  bool ok = true;
  for (int p : {2, 3}) {
    const PSufficiencyReport rep = p_sufficiency_test(fam, mu, p, 10, 64, cfg.seed);
    const std::string tag = "p" + std::to_string(p);
    r.metrics["annulus_sup_" + tag] = rep.annulus_sup;
    r.metrics["max_ratio_" + tag] = rep.max_ratio;
    r.metrics["bound_" + tag] = rep.bound;
    r.metrics["identity_defect_" + tag] = rep.identity_defect;
    r.metrics["identity_samples_" + tag] = rep.identity_samples;
    r.metrics["monotone_ok_" + tag] = rep.monotone_ok;
    r.metrics["psi0_worst_slack_" + tag] = rep.psi0_worst_slack;
    ok = ok && rep.max_ratio <= rep.bound && rep.identity_defect <= 1e-10 && rep.identity_samples > 0 &&
         rep.monotone_ok && rep.psi0_worst_slack <= 1.0;
  }
  r.passed = all_finite(r.metrics) && ok;
  return r;
}

using SuiteFn = SuiteReport (*)(const SuiteConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"atom-decay", atom_decay},       {"sobolev-1d", sobolev_1d},
      {"sobolev-2d", sobolev_2d},       {"bochner-riesz", bochner_riesz},
      {"partition", partition},         {"lemma-h1", lemma_h1},
      {"lemma-lr", lemma_lr},           {"psi-necessity", psi_necessity},
      {"sufficiency-e2e", sufficiency_e2e}, {"p-sufficiency", p_sufficiency},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  for (const auto& [suite, fn] : registry()) {
    if (suite != name) continue;
    SuiteReport report = fn(config);
    report.name = name;
    report.config = config;
    return report;
  }
  fail(ErrorCode::UnknownSuite, "unknown suite " + name);
}

Json suite_report_json(const SuiteReport& report) {
  Json out;
  out["suite"] = report.name;
  out["passed"] = report.passed;
  Json metrics = Json::object();
  for (const auto& [k, v] : report.metrics) metrics[k] = v;
  out["metrics"] = metrics;
  Json prov;
  prov["version"] = library_version();
  prov["seed"] = report.config.seed;
  prov["resolution"] = report.config.resolution;
  prov["matrix"] = report.config.matrix ? matrix_to_json(*report.config.matrix) : Json(nullptr);
  out["provenance"] = prov;
  return out;
}

}  // namespace aniso
