#pragma once

namespace aniso {

// Bessel function of the first kind for real order nu >= 0 and z >= 0.
// Power series up to the switch radius, Hankel asymptotic expansion beyond.
inline constexpr double kBesselSwitch = 12.0;

double bessel_j(double nu, double z);

// J_nu(z) / z^nu, finite at z = 0 where it equals 1 / (2^nu Gamma(nu + 1)).
double bessel_j_scaled(double nu, double z);

// The two branches, exposed for the consistency check at the switch radius.
double bessel_j_series(double nu, double z);
double bessel_j_asymptotic(double nu, double z);

}  // namespace aniso
