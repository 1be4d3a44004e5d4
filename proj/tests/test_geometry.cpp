#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <set>

#include "aniso/error.hpp"
#include "aniso/geometry.hpp"
#include "support.hpp"

using namespace aniso;
using namespace testing_support;

namespace {

ErrorCode code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("spectral radius matches characteristic polynomial") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Matrix m = Matrix::from_rows(uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3),
                                       uniform(rng, -3, 3));
    const double expect = eigen_moduli(m)[1];
    CHECK(gelfand_spectral_radius(m) == doctest::Approx(expect).epsilon(1e-6));
    CHECK(gelfand_spectral_radius(m, 80) == doctest::Approx(gelfand_spectral_radius(m, 40)).epsilon(1e-6));
  }
  CHECK(gelfand_spectral_radius(Matrix::from_rows(0, 2, 1, 0)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(gelfand_spectral_radius(Matrix::from_scalar(-3.0)) == doctest::Approx(3.0));
}

TEST_CASE("validate_dilation rejects bad matrices") {
  CHECK(code_of([] { validate_dilation(Matrix::from_rows(1, 1, 0, 1)); }) == ErrorCode::NotExpansive);
  CHECK(code_of([] { validate_dilation(Matrix::from_rows(2, 0, 0, 0.5)); }) == ErrorCode::NotExpansive);
  CHECK(code_of([] { validate_dilation(Matrix::from_rows(2, 4, 1, 2)); }) == ErrorCode::Singular);
  CHECK(code_of([] { validate_dilation(Matrix::from_scalar(1.0)); }) == ErrorCode::NotExpansive);
}

TEST_CASE("dilation parameters") {
  const DilationParams p = validate_dilation(Matrix::from_rows(2, 0, 0, 3));
  CHECK(p.det_modulus == doctest::Approx(6.0));
  CHECK(p.min_modulus == doctest::Approx(2.0));
  CHECK(p.max_modulus == doctest::Approx(3.0));
  CHECK(p.lambda_minus < p.min_modulus);
  CHECK(p.lambda_plus > p.max_modulus);
  CHECK(p.zeta_minus == doctest::Approx(std::log(p.lambda_minus) / std::log(6.0)));
  CHECK(p.zeta_plus == doctest::Approx(std::log(p.lambda_plus) / std::log(6.0)));
  CHECK(p.adjoint(0, 1) == 0.0);
  const DilationParams jordan = validate_dilation(Matrix::from_rows(2, 1, 0, 2));
  CHECK(jordan.min_modulus == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(jordan.max_modulus == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(jordan.adjoint(1, 0) == 1.0);
  CHECK(jordan.adjoint(0, 1) == 0.0);
}

TEST_CASE("ellipsoid equals the Stein equation solution") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = random_expansive(rng, 2);
    const DilationParams p = validate_dilation(a);
    const double r = default_series_ratio(p);
    const Ellipsoid e = construct_ellipsoid(p, r);
    Matrix s = stein_solution(a.inverse(), r * r);
    s = s * (std::numbers::pi / std::sqrt(s.det()));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(e.shape(i, j) == doctest::Approx(s(i, j)).epsilon(1e-9));
    CHECK(e.volume() == doctest::Approx(1.0).epsilon(1e-12));
    // Q = P^T P with P upper triangular.
    const Matrix pp = e.factor.transpose() * e.factor;
    CHECK(e.factor(1, 0) == 0.0);
    CHECK(pp(0, 1) == doctest::Approx(e.shape(0, 1)).epsilon(1e-12));
  }
}

TEST_CASE("contraction ratio is the sampled maximum") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const Matrix a = random_expansive(rng, 2);
    const DilationParams p = validate_dilation(a);
    const Ellipsoid e = construct_ellipsoid(p, default_series_ratio(p));
    const Matrix inv = a.inverse();
    double worst = 0.0;
    for (int i = 0; i < 20000; ++i) {
      const double th = std::numbers::pi * i / 20000.0;
      const Point x{std::cos(th), std::sin(th)};
      worst = std::max(worst, e.q(inv * x) / e.q(x));
    }
    CHECK(worst <= e.contraction_ratio * (1 + 1e-12));
    CHECK(worst >= e.contraction_ratio * (1 - 1e-6));
  }
}

TEST_CASE("ellipsoid ratio validation") {
  const DilationParams p = validate_dilation(Matrix::from_rows(2, 0, 0, 3));
  CHECK(code_of([&] { construct_ellipsoid(p, 1.0); }) == ErrorCode::InvalidRatio);
  CHECK(code_of([&] { construct_ellipsoid(p, 2.0); }) == ErrorCode::InvalidRatio);
  CHECK_NOTHROW(construct_ellipsoid(p, 1.9));
}

TEST_CASE("one-dimensional ellipsoid is the interval of length 1") {
  const DilationParams p = validate_dilation(Matrix::from_scalar(-3.0));
  const Ellipsoid e = construct_ellipsoid(p, default_series_ratio(p));
  CHECK(e.shape(0, 0) == doctest::Approx(4.0));
  CHECK(e.contraction_ratio == doctest::Approx(1.0 / 9.0));
  CHECK(bounding_rectangle(e).half_widths[0] == doctest::Approx(0.5));
}

TEST_CASE("bounding rectangle touches the ellipse") {
  std::mt19937_64 rng(8);
  const Matrix a = random_expansive(rng, 2);
  const DilationParams p = validate_dilation(a);
  const Ellipsoid e = construct_ellipsoid(p, default_series_ratio(p));
  const Rectangle rect = bounding_rectangle(e);
  // Boundary points x = P^-1 (cos t, sin t).
  const Matrix inv = e.factor.inverse();
  double hx = 0.0, hy = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double t = 2 * std::numbers::pi * i / 100000.0;
    const Point x = inv * Point{std::cos(t), std::sin(t)};
    hx = std::max(hx, std::abs(x[0]));
    hy = std::max(hy, std::abs(x[1]));
  }
  CHECK(rect.half_widths[0] == doctest::Approx(hx).epsilon(1e-8));
  CHECK(rect.half_widths[1] == doctest::Approx(hy).epsilon(1e-8));
  CHECK(rect.vertices().size() == 4);
  CHECK(rect.volume() == doctest::Approx(4 * hx * hy).epsilon(1e-7));
}

TEST_CASE("covering exponent is minimal") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 10; ++t) {
    const Matrix a = random_expansive(rng, 2);
    const GeometryContext ctx = GeometryContext::build(a);
    auto inside = [&](int m) {
      for (const Point& v : ctx.rectangle.vertices())
        if (ctx.primal.ellipsoid().q(ctx.primal.apply_power(-m, v)) > 1.0) return false;
      return true;
    };
    CHECK(inside(ctx.M));
    if (ctx.M > 0) CHECK_FALSE(inside(ctx.M - 1));
  }
}

TEST_CASE("isotropic dilation geometry") {
  const GeometryContext ctx = GeometryContext::build(Matrix::from_rows(2, 0, 0, 2));
  CHECK(ctx.b() == doctest::Approx(4.0));
  CHECK(ctx.primal.ellipsoid().shape(0, 0) == doctest::Approx(std::numbers::pi));
  CHECK(ctx.primal.ellipsoid().contraction_ratio == doctest::Approx(0.25));
  CHECK(ctx.M == 1);
  CHECK(ctx.N == 1);
  // Square (A*)^l R* minus (A*)^(l-1) R* meets the eight neighbours of cell 0.
  for (int l = -2; l <= 2; ++l) CHECK(shell_cover_count(ctx.adjoint, ctx.adjoint_rectangle, ctx.N, l) == 8);
}

TEST_CASE("scale index matches direct search") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 5; ++t) {
    const Matrix a = random_expansive(rng, 2);
    const GeometryContext ctx = GeometryContext::build(a);
    for (int i = 0; i < 200; ++i) {
      const Point x = random_point(rng, 2, -10, 10);
      CHECK(ctx.primal.scale_index(x) == scale_index_oracle(a, ctx.primal.ellipsoid().shape, x));
    }
  }
}

TEST_CASE("scale index is homogeneous (property)") {
  std::mt19937_64 rng(22);
  for (int dim = 1; dim <= 2; ++dim) {
    const Matrix a = random_expansive(rng, dim);
    const GeometryContext ctx = GeometryContext::build(a);
    for (int i = 0; i < 100; ++i) {
      const Point x = random_point(rng, dim);
      const int s = ctx.primal.scale_index(x);
      for (int n = -20; n <= 20; n += 5) CHECK(ctx.primal.scale_index(ctx.primal.apply_power(n, x)) == s + n);
      CHECK(ctx.primal.quasi_norm(x) == doctest::Approx(std::pow(ctx.b(), s)));
    }
  }
  CHECK(GeometryContext::build(Matrix::from_scalar(2)).primal.quasi_norm({0.0, 0.0}) == 0.0);
}

TEST_CASE("matrix powers compose") {
  const GeometryContext ctx = GeometryContext::build(Matrix::from_rows(1.5, 0.5, 0.25, 2.0));
  const Matrix a = ctx.primal.power(1);
  Matrix acc = Matrix::identity(2);
  for (int k = 0; k < 70; ++k) acc = acc * a;
  const Matrix p70 = ctx.primal.power(70);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(p70(i, j) == doctest::Approx(acc(i, j)).epsilon(1e-10));
  const Matrix inv = ctx.primal.power(-1);
  Matrix acc_inv = Matrix::identity(2);
  for (int k = 0; k < 70; ++k) acc_inv = acc_inv * inv;
  const Matrix m70 = ctx.primal.power(-70);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(m70(i, j) == doctest::Approx(acc_inv(i, j)).epsilon(1e-10));
}

TEST_CASE("growth bounds and quasi-triangle constant") {
  const GeometryContext ctx = GeometryContext::build(Matrix::from_rows(1.5, 0.5, 0.25, 2.0));
  std::mt19937_64 rng(4);
  std::vector<Point> xs;
  std::vector<std::pair<Point, Point>> pairs;
  for (int i = 0; i < 2000; ++i) xs.push_back(random_point(rng, 2, -8, 8));
  for (int i = 0; i < 2000; ++i) pairs.push_back({random_point(rng, 2), random_point(rng, 2)});
  const double c = growth_bounds(ctx.primal, xs);
  CHECK(c >= 1.0);
  CHECK(std::isfinite(c));
  const double k = fit_quasi_triangle(ctx.primal, pairs);
  CHECK(k > 0.0);
  CHECK(std::isfinite(k));
  CHECK(code_of([&] { growth_bounds(ctx.primal, std::span<const Point>{}); }) == ErrorCode::EmptySample);
  CHECK(code_of([&] { fit_quasi_triangle(ctx.primal, std::span<const std::pair<Point, Point>>{}); }) ==
        ErrorCode::EmptySample);
}

TEST_CASE("cell index uses left-closed cells") {
  const GeometryContext ctx = GeometryContext::build(Matrix::from_rows(2, 0, 0, 2));
  const double h = ctx.adjoint_rectangle.half_widths[0];
  CHECK(cell_index(ctx.adjoint, ctx.adjoint_rectangle, 0, {0.0, 0.0}) == Cell{0, 0});
  CHECK(cell_index(ctx.adjoint, ctx.adjoint_rectangle, 0, {h, -h * 0.999}) == Cell{1, 0});
  CHECK(cell_index(ctx.adjoint, ctx.adjoint_rectangle, 1, {2 * h, 0.0}) == Cell{1, 0});
  CHECK(cell_index(ctx.adjoint, ctx.adjoint_rectangle, 0, {-3 * h, 5 * h}) == Cell{-1, 3});
}

TEST_CASE("shell cover count is scale invariant") {
  const GeometryContext ctx = GeometryContext::build(Matrix::from_rows(1.5, 0.5, 0.25, 2.0));
  const int c0 = shell_cover_count(ctx.adjoint, ctx.adjoint_rectangle, ctx.N, 0);
  CHECK(c0 > 0);
  for (int l = -3; l <= 3; ++l) CHECK(shell_cover_count(ctx.adjoint, ctx.adjoint_rectangle, ctx.N, l) == c0);
}

}  // TEST_SUITE
