#include "aniso/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "aniso/bessel.hpp"
#include "aniso/error.hpp"
#include "aniso/numerics.hpp"

namespace aniso {

std::array<double, 2> level_half_widths(const QuasiNormContext& ctx, int k) {
  const Matrix ak = ctx.power(k);
  const Matrix inv = ak * ctx.ellipsoid().shape.inverse() * ak.transpose();
  std::array<double, 2> h{std::sqrt(inv(0, 0)), 0.0};
  if (ctx.dim() == 2) h[1] = std::sqrt(inv(1, 1));
  return h;
}

namespace {

// Offsets of the midpoint samples of [-h, h] with n cells, independent of
// any center.
std::vector<double> offsets(double h, int n) {
  std::vector<double> out(n);
  const double step = 2.0 * h / n;
  for (int i = 0; i < n; ++i) out[i] = -h + (i + 0.5) * step;
  return out;
}

}  // namespace

Atom make_atom(const QuasiNormContext& ctx, int k, const Point& center, std::uint64_t seed,
               int resolution) {
  if (resolution < 64) fail(ErrorCode::InvalidArgument, "atom resolution must be >= 64");
  const int d = ctx.dim();
  const auto h = level_half_widths(ctx, k);
  Point lo{center[0] - h[0], d == 2 ? center[1] - h[1] : 0.0};
  Point hi{center[0] + h[0], d == 2 ? center[1] + h[1] : 0.0};
  Atom atom;
  atom.k = k;
  atom.center = center;
  atom.mass_bound = std::pow(ctx.b(), -k);
  atom.carrier = SampledFunction(Grid::midpoint(d, resolution, lo, hi));

  std::mt19937_64 rng(seed);
  auto draw_center = [&]() -> Point {
    if (d == 1) return {uniform(rng, -0.4, 0.4), 0.0};
    const double r = 0.4 * std::sqrt(uniform01(rng));
    const double t = 2.0 * std::numbers::pi * uniform01(rng);
    return {r * std::cos(t), r * std::sin(t)};
  };
  const Point c1 = draw_center();
  const Point c2 = draw_center();
  const double s1 = uniform(rng, 0.2, 0.3);
  const double s2 = uniform(rng, 0.2, 0.3);
  const double w2 = uniform(rng, 0.5, 1.0);

  const Matrix to_unit = ctx.ellipsoid().factor * ctx.power(-k);
  const auto off0 = offsets(h[0], resolution);
  const auto off1 = d == 2 ? offsets(h[1], resolution) : std::vector<double>{0.0};
  const int n1 = atom.carrier.grid.extent[1];
  std::vector<double> window(atom.carrier.values.size(), 0.0);
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < n1; ++j) {
      const Point u = to_unit * Point{off0[i], off1[j]};
      const double r2 = dot(u, u, d);
      if (r2 >= 1.0) continue;
      const double wv = std::pow(1.0 - r2, 3);
      const Point e1{u[0] - c1[0], u[1] - c1[1]};
      const Point e2{u[0] - c2[0], u[1] - c2[1]};
      const double g = std::exp(-dot(e1, e1, d) / (2.0 * s1 * s1)) -
                       w2 * std::exp(-dot(e2, e2, d) / (2.0 * s2 * s2));
      const std::size_t idx = static_cast<std::size_t>(i) * n1 + j;
      window[idx] = wv;
      atom.carrier.values[idx] = g * wv;
    }
  }

  CompensatedSum window_sum;
  for (double w : window) window_sum.add(w);
  if (!(window_sum.value() > 0.0)) fail(ErrorCode::DegenerateProfile, "atom support holds no samples");
  const double target = atom.mass_bound * (1.0 - 1e-6);
  auto& v = atom.carrier.values;
  for (int iter = 0; iter < 5; ++iter) {
    CompensatedSum total;
    for (double x : v) total.add(x);
    const double shift = total.value() / window_sum.value();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= shift * window[i];
    const double sup = atom.carrier.sup_abs();
    if (!(sup > 0.0)) fail(ErrorCode::DegenerateProfile, "atom profile vanished after mean correction");
    const double scale = target / sup;
    for (double& x : v) x *= scale;
    const AtomCheck c = check_atom(atom, ctx);
    if (c.sup_ok && c.moment_ok && c.support_ok) return atom;
  }
  fail(ErrorCode::DegenerateProfile, "atom invariants not met after 5 corrections");
}

AtomCheck check_atom(const Atom& atom, const QuasiNormContext& ctx) {
  AtomCheck c;
  const SampledFunction& f = atom.carrier;
  const int d = ctx.dim();
  c.support_ok = true;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (f.values[i] == 0.0) continue;
    const Point x = f.grid.point(i);
    const Point rel{x[0] - atom.center[0], d == 2 ? x[1] - atom.center[1] : 0.0};
    if (ctx.level(atom.k, rel) >= 1.0 + 1e-9) c.support_ok = false;
  }
  c.sup_ok = f.sup_abs() <= atom.mass_bound;
  const double l1 = f.l1_norm();
  c.moment = l1 > 0.0 ? std::abs(f.integral()) / l1 : 0.0;
  c.moment_ok = c.moment <= 1e-12;
  return c;
}

std::vector<Point> base_shell_points(const QuasiNormContext& adjoint, int count,
                                     std::uint64_t seed) {
  return discretize_density(1.0, adjoint, 0, 0, count, seed).points;
}

double verify_atom_decay(const Atom& atom, const QuasiNormContext& primal,
                         const QuasiNormContext& adjoint, int samples_per_shell, int shells,
                         std::uint64_t seed) {
  if (samples_per_shell < 1 || shells < 1)
    fail(ErrorCode::NoValidFrequencies, "decay check needs at least one frequency");
  const double zeta = primal.params().zeta_minus;
  const double b = primal.b();
  const auto base = base_shell_points(adjoint, samples_per_shell, seed);
  std::vector<Point> xi;
  std::vector<double> bound;
  for (int s = 1; s <= shells; ++s) {
    const int j = -atom.k - s;
    for (const Point& p : base) {
      xi.push_back(adjoint.apply_power(j, p));
      // b^(k zeta) rho*(xi)^zeta with rho*(xi) = b^j.
      bound.push_back(std::pow(b, (atom.k + j) * zeta));
    }
  }
  const auto values = fourier_at(atom.carrier, xi);
  double worst = 0.0;
  for (std::size_t i = 0; i < xi.size(); ++i) worst = std::max(worst, std::abs(values[i]) / bound[i]);
  return worst;
}

double pair_against_measure(const SampledFunction& f, const PointMeasure& mu, double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) fail(ErrorCode::InvalidExponent, "p must be finite and >= 1");
  if (mu.size() == 0) return 0.0;
  const auto values = fourier_at(f, mu.points);
  double largest = 0.0;
  for (const auto& v : values) largest = std::max(largest, std::abs(v));
  if (largest == 0.0) return 0.0;
  CompensatedSum s;
  for (std::size_t i = 0; i < values.size(); ++i)
    s.add(mu.weights[i] * std::pow(std::abs(values[i]) / largest, p));
  return largest * std::pow(s.value(), 1.0 / p);
}

double cell_sup_l2(const Atom& atom, const GeometryContext& ctx, int k, int alpha_range,
                   int subgrid) {
  if (alpha_range < 1 || subgrid < 1) fail(ErrorCode::InvalidArgument, "empty cell range");
  const int d = ctx.dim();
  const Matrix to_freq = ctx.adjoint.power(-(k + ctx.N));
  const auto& h = ctx.adjoint_rectangle.half_widths;
  std::vector<double> local;
  for (int i = 0; i < subgrid; ++i) local.push_back((2.0 * i + 1.0) / subgrid - 1.0);

  std::vector<Point> xi;
  std::size_t per_cell = 0;
  const int r1 = d == 2 ? alpha_range : 0;
  for (int a0 = -alpha_range; a0 <= alpha_range; ++a0) {
    for (int a1 = -r1; a1 <= r1; ++a1) {
      if (a0 == 0 && a1 == 0) continue;
      const Point c{2.0 * h[0] * a0, 2.0 * h[1] * a1};
      const std::size_t before = xi.size();
      xi.push_back(to_freq * c);
      for (double s : local) {
        if (d == 1) {
          xi.push_back(to_freq * Point{c[0] + s * h[0], 0.0});
          continue;
        }
        for (double t : local) xi.push_back(to_freq * Point{c[0] + s * h[0], c[1] + t * h[1]});
      }
      per_cell = xi.size() - before;
    }
  }
  const auto values = fourier_at(atom.carrier, xi);
  CompensatedSum total;
  for (std::size_t start = 0; start < values.size(); start += per_cell) {
    double m = 0.0;
    for (std::size_t i = start; i < start + per_cell; ++i) m = std::max(m, std::abs(values[i]));
    total.add(m * m);
  }
  return total.value();
}

double bochner_riesz_kernel(double lambda, int d, double r) {
  if (!(lambda > -1.0)) fail(ErrorCode::InvalidArgument, "Bochner-Riesz order must exceed -1");
  if (d != 1 && d != 2) fail(ErrorCode::UnsupportedDimension, "dimension must be 1 or 2");
  const double nu = 0.5 * d + lambda;
  const double two_pi = 2.0 * std::numbers::pi;
  const double r_abs = std::abs(r);
  // J_nu(2 pi r) / r^nu = (2 pi)^nu J_nu(z) / z^nu with z = 2 pi r.
  return std::tgamma(lambda + 1.0) / std::pow(std::numbers::pi, lambda) * std::pow(two_pi, nu) *
         bessel_j_scaled(nu, two_pi * r_abs);
}

std::vector<double> bochner_riesz_inverse(double lambda, int d, std::span<const double> radii) {
  std::vector<double> out;
  out.reserve(radii.size());
  for (double r : radii) out.push_back(bochner_riesz_kernel(lambda, d, r));
  return out;
}

double bochner_riesz_quadrature(double lambda, int d, double r) {
  if (!(lambda >= 0.0)) fail(ErrorCode::InvalidArgument, "quadrature companion needs lambda >= 0");
  const double two_pi = 2.0 * std::numbers::pi;
  const double half_pi = 0.5 * std::numbers::pi;
  const int panels = std::max(16, static_cast<int>(std::ceil(8.0 * std::abs(r))));
  // t = sin(phi) turns (1 - t^2)^lambda dt into cos^(2 lambda + 1)(phi) dphi.
  if (d == 1) {
    return 2.0 * integrate(
                     [&](double phi) {
                       return std::pow(std::cos(phi), 2.0 * lambda + 1.0) *
                              std::cos(two_pi * r * std::sin(phi));
                     },
                     0.0, half_pi, panels);
  }
  if (d != 2) fail(ErrorCode::UnsupportedDimension, "dimension must be 1 or 2");
  auto j0 = [&](double z) {
    const int inner = std::max(8, static_cast<int>(std::ceil(z / 2.0)));
    return integrate([&](double tau) { return std::cos(z * std::sin(tau)); }, 0.0,
                     std::numbers::pi, inner) /
           std::numbers::pi;
  };
  return two_pi * integrate(
                      [&](double phi) {
                        const double s = std::sin(phi);
                        return std::pow(std::cos(phi), 2.0 * lambda + 1.0) * s *
                               j0(two_pi * r * s);
                      },
                      0.0, half_pi, panels);
}

ChiCheck chi_transform_check(const QuasiNormContext& adjoint, int k, double lambda,
                             std::span<const Point> frequencies, int resolution) {
  if (frequencies.empty()) fail(ErrorCode::NoValidFrequencies, "no test frequencies");
  const int d = adjoint.dim();
  const auto h = level_half_widths(adjoint, k);
  SampledFunction chi(Grid::midpoint(d, resolution, Point{-h[0], -h[1]}, Point{h[0], h[1]}));
  const Matrix& p = adjoint.ellipsoid().factor;
  const Matrix to_unit = p * adjoint.power(-k);
  for (std::size_t i = 0; i < chi.values.size(); ++i) {
    const Point u = to_unit * chi.grid.point(i);
    const double r2 = dot(u, u, d);
    if (r2 < 1.0) chi.values[i] = std::pow(1.0 - r2, lambda);
  }
  ChiCheck out;
  out.support_ok = true;
  for (std::size_t i = 0; i < chi.values.size(); ++i) {
    const Point u = to_unit * chi.grid.point(i);
    if (dot(u, u, d) >= 1.0 && chi.values[i] != 0.0) out.support_ok = false;
  }
  const double scale = std::pow(adjoint.b(), k) / std::abs(p.det());
  const Matrix to_radial = p.inverse().transpose() * adjoint.power(k).transpose();
  const double at_zero = scale * bochner_riesz_kernel(lambda, d, 0.0);
  const auto grid_values = fourier_at(chi, frequencies);
  for (std::size_t i = 0; i < frequencies.size(); ++i) {
    const Point eta = to_radial * frequencies[i];
    const double exact = scale * bochner_riesz_kernel(lambda, d, norm(eta, d));
    out.max_error = std::max(out.max_error, std::abs(grid_values[i] - exact) / at_zero);
  }
  return out;
}

}  // namespace aniso
