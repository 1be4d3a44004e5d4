#include "aniso/bessel.hpp"

#include <cmath>
#include <numbers>

#include "aniso/error.hpp"

namespace aniso {

namespace {

void check_args(double nu, double z) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) fail(ErrorCode::InvalidArgument, "Bessel order must be >= 0");
  if (!(z >= 0.0) || !std::isfinite(z)) fail(ErrorCode::InvalidArgument, "Bessel argument must be >= 0");
}

// sum_m (-1)^m (z/2)^(2m) / (m! Gamma(m + nu + 1)), the series without the
// (z/2)^nu prefactor.
double reduced_series(double nu, double z) {
  const double x = 0.25 * z * z;
  double term = 1.0 / std::tgamma(nu + 1.0);
  double sum = term;
  for (int m = 0; m < 200; ++m) {
    term *= -x / ((m + 1.0) * (m + 1.0 + nu));
    sum += term;
    if (m + 1.0 > 0.5 * z && std::abs(term) < 1e-16 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

double bessel_j_series(double nu, double z) {
  check_args(nu, z);
  if (z == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  return std::pow(0.5 * z, nu) * reduced_series(nu, z);
}

double bessel_j_asymptotic(double nu, double z) {
  check_args(nu, z);
  if (z == 0.0) fail(ErrorCode::InvalidArgument, "asymptotic branch needs z > 0");
  const double mu = 4.0 * nu * nu;
  // a_k / z^k with a_k = prod_{j=1..k} (mu - (2j-1)^2) / (k! 8^k).
  double p = 1.0, q = 0.0;
  double term = 1.0;
  double last = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * z);
    const double mag = std::abs(term);
    if (mag > last && k > 2) break;  // the expansion has started to diverge
    last = mag;
    // Signs: P = a0 - a2 + a4 - ..., Q = a1 - a3 + a5 - ...
    const int r = k % 4;
    if (r == 1) q += term;
    else if (r == 2) p -= term;
    else if (r == 3) q -= term;
    else p += term;
    if (mag < 1e-17) break;
  }
  const double omega = z - 0.5 * nu * std::numbers::pi - 0.25 * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * z)) * (p * std::cos(omega) - q * std::sin(omega));
}

double bessel_j(double nu, double z) {
  return z <= kBesselSwitch ? bessel_j_series(nu, z) : bessel_j_asymptotic(nu, z);
}

double bessel_j_scaled(double nu, double z) {
  check_args(nu, z);
  if (z <= kBesselSwitch) return std::pow(0.5, nu) * reduced_series(nu, z);
  return bessel_j_asymptotic(nu, z) / std::pow(z, nu);
}

}  // namespace aniso
