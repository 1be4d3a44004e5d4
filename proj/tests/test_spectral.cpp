#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "aniso/bessel.hpp"
#include "aniso/error.hpp"
#include "aniso/grid.hpp"
#include "aniso/spectral.hpp"
#include "support.hpp"

using namespace aniso;
using namespace testing_support;

namespace {

constexpr double kPi = std::numbers::pi;

GeometryContext skewed() { return GeometryContext::build(Matrix::from_rows(1.5, 0.5, 0.25, 2.0)); }

SampledFunction gaussian_on(const Grid& g) {
  SampledFunction f(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Point x = g.point(i);
    f.values[i] = std::exp(-kPi * (x[0] * x[0] + (g.dim == 2 ? x[1] * x[1] : 0.0)));
  }
  return f;
}

// Bessel function by the integral representation, including the Schlafli
// correction for non-integer order.
// Composite Simpson rule on [a, b] with n (even) panels.
template <class F>
double simpson(F f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

double bessel_integral(double nu, double z) {
  double value = simpson([&](double t) { return std::cos(nu * t - z * std::sin(t)); }, 0.0, kPi, 20000) / kPi;
  const double sn = std::sin(nu * kPi);
  if (sn != 0.0)
    value -= sn / kPi * simpson([&](double t) { return std::exp(-z * std::sinh(t) - nu * t); }, 0.0, 40.0, 80000);
  return value;
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("fourier_at reproduces the Gaussian transform") {
  for (int dim = 1; dim <= 2; ++dim) {
    const Grid g = Grid::midpoint(dim, 256, {-6.0, dim == 2 ? -6.0 : 0.0}, {6.0, dim == 2 ? 6.0 : 0.0});
    const SampledFunction f = gaussian_on(g);
    std::vector<Point> xi;
    std::mt19937_64 rng(1);
    for (int i = 0; i < 40; ++i) {
      const double r = uniform(rng, 0.0, 2.0), t = uniform(rng, 0.0, 2 * kPi);
      xi.push_back(dim == 1 ? Point{r * std::cos(t), 0.0} : Point{r * std::cos(t), r * std::sin(t)});
    }
    const auto v = fourier_at(f, xi);
    for (std::size_t i = 0; i < xi.size(); ++i) {
      const double expect = gaussian_hat(xi[i], dim);
      CHECK(std::abs(v[i] - expect) <= 1e-8 * expect);
    }
  }
}

TEST_CASE("fourier_at of a single sample is constant") {
  Grid g = Grid::centered(2, 8, {0.5, 0.25});
  SampledFunction f(g);
  f.at(4, 4) = 3.0;  // the origin
  const std::vector<Point> xi{{0.0, 0.0}, {1.3, -2.0}, {17.0, 4.5}};
  for (const auto& v : fourier_at(f, xi)) {
    CHECK(v.real() == doctest::Approx(3.0 * g.cell_volume()).epsilon(1e-14));
    CHECK(std::abs(v.imag()) < 1e-14);
  }
}

TEST_CASE("grid norms and Parseval") {
  const Grid g = Grid::centered(1, 1024, {1.0 / 32.0, 1.0});
  const SampledFunction f = gaussian_on(g);
  CHECK(f.integral() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f.l2_norm() == doctest::Approx(std::pow(0.5, 0.25)).epsilon(1e-12));
  CHECK(f.sup_abs() == 1.0);
  CHECK(f.boundary_sup() < 1e-100);
  // Periodic grid: sum |f|^2 h equals the dual-grid sum of |f^|^2 / (n h).
  std::vector<Point> xi;
  for (int i = 0; i < 1024; ++i) xi.push_back({(i - 512) / 32.0, 0.0});
  double freq = 0.0;
  for (const auto& v : fourier_at(f, xi)) freq += std::norm(v) / 32.0;
  CHECK(freq == doctest::Approx(f.l2_norm() * f.l2_norm()).epsilon(1e-10));
}

TEST_CASE("atoms satisfy their invariants") {
  const GeometryContext ctx = skewed();
  for (int k = -3; k <= 3; ++k) {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const Atom a = make_atom(ctx.primal, k, {0.5, -1.5}, seed, 64);
      const AtomCheck c = check_atom(a, ctx.primal);
      CHECK(c.support_ok);
      CHECK(c.sup_ok);
      CHECK(c.moment_ok);
      CHECK(std::abs(a.carrier.integral()) <= 1e-12 * a.carrier.l1_norm());
      CHECK(a.carrier.sup_abs() <= std::pow(ctx.b(), -k));
      const auto at0 = fourier_at(a.carrier, std::vector<Point>{{0.0, 0.0}});
      CHECK(std::abs(at0[0]) <= 1e-12 * a.carrier.l1_norm());
      // Samples outside center + Delta_k vanish.
      for (std::size_t i = 0; i < a.carrier.values.size(); ++i) {
        const Point x = a.carrier.grid.point(i);
        if (ctx.primal.level(k, {x[0] - 0.5, x[1] + 1.5}) >= 1.0) CHECK(a.carrier.values[i] == 0.0);
      }
    }
  }
  CHECK_THROWS_AS(make_atom(ctx.primal, 0, {0, 0}, 1, 32), Error);
}

TEST_CASE("translation only changes the phase of the atom transform") {
  const GeometryContext ctx = skewed();
  const Atom a = make_atom(ctx.primal, 1, {0.0, 0.0}, 4, 64);
  const Atom b = make_atom(ctx.primal, 1, {3.25, -7.5}, 4, 64);
  CHECK(a.carrier.values == b.carrier.values);
  std::mt19937_64 rng(2);
  std::vector<Point> xi;
  for (int i = 0; i < 30; ++i) xi.push_back(random_point(rng, 2, -3, 2));
  const auto va = fourier_at(a.carrier, xi), vb = fourier_at(b.carrier, xi);
  for (std::size_t i = 0; i < xi.size(); ++i) CHECK(std::abs(std::abs(va[i]) - std::abs(vb[i])) <= 1e-12);
}

TEST_CASE("one-dimensional atoms") {
  const GeometryContext ctx = GeometryContext::build(Matrix::from_scalar(3.0));
  const Atom a = make_atom(ctx.primal, 2, {1.0, 0.0}, 9, 128);
  const AtomCheck c = check_atom(a, ctx.primal);
  CHECK((c.support_ok && c.sup_ok && c.moment_ok));
  CHECK(std::isfinite(verify_atom_decay(a, ctx.primal, ctx.adjoint, 50, 4, 1)));
}

TEST_CASE("atom decay ratio is finite and scale covariant") {
  const GeometryContext ctx = skewed();
  std::vector<double> r;
  for (int k = -1; k <= 1; ++k) {
    const Atom a = make_atom(ctx.primal, k, {0.0, 0.0}, 7, 96);
    r.push_back(verify_atom_decay(a, ctx.primal, ctx.adjoint, 50, 4, 3));
    CHECK(std::isfinite(r.back()));
    CHECK(r.back() > 0.0);
  }
  CHECK(*std::max_element(r.begin(), r.end()) / *std::min_element(r.begin(), r.end()) <= 2.0);
  const Atom a = make_atom(ctx.primal, 0, {0.0, 0.0}, 7, 64);
  CHECK_THROWS_AS(verify_atom_decay(a, ctx.primal, ctx.adjoint, 0, 4, 3), Error);
}

TEST_CASE("pairing against measures") {
  const GeometryContext ctx = skewed();
  const Atom a = make_atom(ctx.primal, 0, {0.0, 0.0}, 2, 64);
  const Point xi{0.7, -0.3};
  const double direct = std::abs(fourier_at(a.carrier, std::vector<Point>{xi})[0]);
  const PointMeasure delta = PointMeasure::make(2, {xi}, {1.0});
  CHECK(pair_against_measure(a.carrier, delta, 1.0) == doctest::Approx(direct).epsilon(1e-14));
  CHECK(pair_against_measure(a.carrier, delta, 3.0) == doctest::Approx(direct).epsilon(1e-13));
  std::mt19937_64 rng(3);
  std::vector<Point> pts;
  std::vector<double> ws;
  for (int i = 0; i < 20; ++i) {
    pts.push_back(random_point(rng, 2));
    ws.push_back(uniform(rng, 0, 1));
  }
  const PointMeasure mu = PointMeasure::make(2, pts, ws);
  CHECK(pair_against_measure(a.carrier, mu.scaled(2.5), 1.0) ==
        doctest::Approx(2.5 * pair_against_measure(a.carrier, mu, 1.0)).epsilon(1e-13));
  CHECK(pair_against_measure(a.carrier, PointMeasure::make(2, {}, {}), 1.0) == 0.0);
  CHECK_THROWS_AS(pair_against_measure(a.carrier, mu, 0.5), Error);
}

TEST_CASE("cell sup sum bounds single cells and is refinement stable") {
  const GeometryContext ctx = skewed();
  const Atom a = make_atom(ctx.primal, 0, {0.0, 0.0}, 7, 64);
  const double v1 = cell_sup_l2(a, ctx, 0, 1, 4);
  const double v4 = cell_sup_l2(a, ctx, 0, 4, 4);
  const double v4_fine = cell_sup_l2(a, ctx, 0, 4, 16);
  CHECK(v1 > 0.0);
  CHECK(v4 >= v1);
  CHECK(std::abs(v4_fine / v4 - 1.0) < 0.1);
  CHECK_THROWS_AS(cell_sup_l2(a, ctx, 0, 0), Error);
}

TEST_CASE("Bessel series against the library oracle") {
  for (double nu : {0.0, 0.5, 1.0, 1.5, 2.25, 3.0, 4.5}) {
    for (double z : {0.0, 0.01, 0.5, 1.0, 3.7, 8.0, 11.9, 12.1, 20.0, 55.5, 300.0}) {
      const double expect = std::cyl_bessel_j(nu, z);
      CHECK(bessel_j(nu, z) == doctest::Approx(expect).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("Bessel closed forms and integral representation") {
  CHECK(bessel_j(0.0, 0.0) == 1.0);
  CHECK(bessel_j(2.5, 0.0) == 0.0);
  CHECK(std::abs(bessel_j(0.5, kPi)) < 1e-15);
  for (double z : {0.3, 2.0, 9.0, 15.0, 40.0})
    CHECK(bessel_j(0.5, z) == doctest::Approx(std::sqrt(2.0 / (kPi * z)) * std::sin(z)).epsilon(1e-10));
  CHECK(std::abs(bessel_j(1.5, 1.0) - bessel_integral(1.5, 1.0)) <= 1e-10);
  CHECK(std::abs(bessel_j(2.0, 1.0) - bessel_integral(2.0, 1.0)) <= 1e-10);
  CHECK(bessel_j_scaled(1.5, 0.0) == doctest::Approx(1.0 / (std::pow(2.0, 1.5) * std::tgamma(2.5))));
}

TEST_CASE("Bessel branches agree at the switch radius") {
  for (int i = 0; i <= 10; ++i) {
    const double nu = 0.5 * i;
    CHECK(std::abs(bessel_j_series(nu, kBesselSwitch) - bessel_j_asymptotic(nu, kBesselSwitch)) <= 1e-8);
  }
}

TEST_CASE("Bochner-Riesz kernel closed forms") {
  for (double x : {0.05, 0.3, 1.0, 2.7, 10.0}) {
    const double a = 2 * kPi * x;
    CHECK(bochner_riesz_kernel(0.0, 1, x) == doctest::Approx(std::sin(a) / (kPi * x)).epsilon(1e-10));
    const double lam1 = -4 * std::cos(a) / (a * a) + 4 * std::sin(a) / (a * a * a);
    CHECK(bochner_riesz_kernel(1.0, 1, x) == doctest::Approx(lam1).epsilon(1e-8).scale(1e-12));
    CHECK(bochner_riesz_kernel(0.0, 2, x) == doctest::Approx(std::cyl_bessel_j(1.0, a) / x).epsilon(1e-9));
  }
  CHECK(bochner_riesz_kernel(1.0, 1, 0.0) == doctest::Approx(4.0 / 3.0));
  CHECK(bochner_riesz_kernel(0.0, 2, 0.0) == doctest::Approx(kPi));
  CHECK(bochner_riesz_kernel(2.0, 2, 0.0) == doctest::Approx(kPi / 3.0));
  CHECK_THROWS_AS(bochner_riesz_kernel(-1.0, 1, 1.0), Error);
  const std::vector<double> radii{0.1, 1.0, 10.0};
  const auto v = bochner_riesz_inverse(2.0, 1, radii);
  for (std::size_t i = 0; i < radii.size(); ++i) CHECK(v[i] == bochner_riesz_kernel(2.0, 1, radii[i]));
}

TEST_CASE("Bochner-Riesz quadrature companion") {
  for (int d = 1; d <= 2; ++d)
    for (double lambda : {0.0, 1.0, 2.0})
      for (double r : {0.1, 1.0, 10.0}) {
        const double closed = bochner_riesz_kernel(lambda, d, r);
        // lambda = 0 in 1D vanishes at integer radii; those points get an absolute floor.
        CHECK(std::abs(bochner_riesz_quadrature(lambda, d, r) - closed) <= 1e-6 * std::max(std::abs(closed), 1e-8));
      }
}

TEST_CASE("chi transform identity") {
  const GeometryContext iso = GeometryContext::build(Matrix::from_rows(2, 0, 0, 2));
  std::vector<Point> xi;
  for (int i = 0; i < 20; ++i) xi.push_back({0.1 * i, -0.05 * i});
  const ChiCheck c = chi_transform_check(iso.adjoint, 1, 2.0, xi, 256);
  CHECK(c.support_ok);
  CHECK(c.max_error <= 1e-6);
  const GeometryContext one = GeometryContext::build(Matrix::from_scalar(2.0));
  std::vector<Point> xi1;
  for (int i = 0; i < 20; ++i) xi1.push_back({0.37 * i, 0.0});
  const ChiCheck c1 = chi_transform_check(one.adjoint, 0, 1.5, xi1, 512);
  CHECK(c1.support_ok);
  CHECK(c1.max_error <= 1e-6);
  CHECK_THROWS_AS(chi_transform_check(one.adjoint, 0, 1.5, std::vector<Point>{}, 512), Error);
}

}  // TEST_SUITE
