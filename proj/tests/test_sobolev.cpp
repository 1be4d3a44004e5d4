#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>

#include "aniso/error.hpp"
#include "aniso/sobolev.hpp"

using namespace aniso;

namespace {

SampledFunction sample(const Grid& g, double (*f)(double, double)) {
  SampledFunction out(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Point x = g.point(i);
    out.values[i] = f(x[0], x[1]);
  }
  return out;
}

double gauss(double x, double) { return std::exp(-x * x); }
double dgauss(double x, double) { return -2 * x * std::exp(-x * x); }

// Direct sums for the one-dimensional inequality.
SobolevResult1D oracle_1d(const SampledFunction& f, const SampledFunction& df, double L) {
  std::map<long long, double> sup;
  double f2 = 0, d2 = 0;
  for (int i = 0; i < f.grid.extent[0]; ++i) {
    const double x = f.grid.coordinate(0, i);
    const long long a = static_cast<long long>(std::floor(x / L + 0.5));
    sup[a] = std::max(sup[a], std::abs(f.values[i]));
    f2 += f.values[i] * f.values[i] * f.grid.spacing[0];
    d2 += df.values[i] * df.values[i] * f.grid.spacing[0];
  }
  SobolevResult1D r;
  for (const auto& [a, s] : sup) r.lhs += s * s;
  r.rhs = f2 / L + L * d2;
  r.ratio = r.lhs / r.rhs;
  return r;
}

}  // namespace

TEST_SUITE("sobolev") {

TEST_CASE("one-dimensional sums match direct evaluation") {
  const Grid g = Grid::centered(1, 4096, {1.0 / 128, 1.0});
  const SampledFunction f = sample(g, gauss), df = sample(g, dgauss);
  for (double L : {0.0625, 0.3, 1.0, 2.5, 8.0}) {
    const SobolevResult1D a = sobolev_sup_sum_1d(f, df, L);
    const SobolevResult1D b = oracle_1d(f, df, L);
    CHECK(a.lhs == doctest::Approx(b.lhs).epsilon(1e-12));
    CHECK(a.rhs == doctest::Approx(b.rhs).epsilon(1e-12));
    CHECK(a.ratio <= 2.0 * 1.05);
  }
}

TEST_CASE("Gaussian with unit intervals") {
  const Grid g = Grid::centered(1, 8192, {1.0 / 256, 1.0});
  const SobolevResult1D r = sobolev_sup_sum_1d(sample(g, gauss), sample(g, dgauss), 1.0);
  CHECK(r.ratio > 0.0);
  CHECK(r.ratio <= 2.1);
}

TEST_CASE("zero function has ratio zero") {
  const Grid g = Grid::centered(1, 256, {0.1, 1.0});
  const SampledFunction z(g);
  const SobolevResult1D r = sobolev_sup_sum_1d(z, z, 1.0);
  CHECK(r.lhs == 0.0);
  CHECK(r.rhs == 0.0);
  CHECK(r.ratio == 0.0);
}

TEST_CASE("boundary leak and argument checks") {
  const Grid g = Grid::centered(1, 256, {0.01, 1.0});
  const SampledFunction f = sample(g, gauss), df = sample(g, dgauss);
  CHECK_THROWS_AS(sobolev_sup_sum_1d(f, df, 1.0), Error);
  try {
    sobolev_sup_sum_1d(f, df, 1.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundaryLeak);
  }
  const Grid ok = Grid::centered(1, 4096, {1.0 / 128, 1.0});
  CHECK_THROWS_AS(sobolev_sup_sum_1d(sample(ok, gauss), sample(ok, dgauss), 0.0), Error);
  CHECK_THROWS_AS(sobolev_sup_sum_1d(sample(ok, gauss), df, 1.0), Error);
}

TEST_CASE("two-dimensional product Gaussian") {
  const Grid g = Grid::centered(2, 256, {1.0 / 16, 1.0 / 16});
  auto f = [](double x, double y) { return std::exp(-x * x - y * y); };
  SampledFunction v(g), d1(g), d2(g), d12(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Point p = g.point(i);
    const double e = f(p[0], p[1]);
    v.values[i] = e;
    d1.values[i] = -2 * p[0] * e;
    d2.values[i] = -2 * p[1] * e;
    d12.values[i] = 4 * p[0] * p[1] * e;
  }
  const SobolevResult2D r = sobolev_sup_sum_2d(v, d1, d2, d12, 1.0, 1.0);
  CHECK(std::isfinite(r.ratio));
  CHECK(r.ratio > 0.0);
  double sum = 0.0;
  for (double t : r.terms) sum += t;
  CHECK(r.ratio == doctest::Approx(r.lhs / sum).epsilon(1e-14));
  // 1/|Q| int f^2 = pi / 2 for |Q| = 1.
  CHECK(r.terms[3] == doctest::Approx(std::numbers::pi / 2).epsilon(1e-10));
  // |Q| int |d2 d1 f|^2 = 16 (int x^2 e^{-2x^2})^2 = pi / 2.
  CHECK(r.terms[1] == doctest::Approx(std::numbers::pi / 2).epsilon(1e-10));
  // Each cell sup is bounded by 1, and the central cell holds f(0) = 1.
  CHECK(r.lhs >= 1.0);
}

}  // TEST_SUITE
