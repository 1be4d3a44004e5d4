#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "aniso/geometry.hpp"
#include "aniso/grid.hpp"
#include "aniso/measure.hpp"

namespace aniso {

// Grid-sampled atom supported in center + Delta_k.
struct Atom {
  int k = 0;
  Point center{};
  SampledFunction carrier;
  double mass_bound = 0.0;  // b^-k
};

// Half-widths of the bounding box of A^k(E) for the ellipsoid E of ctx.
std::array<double, 2> level_half_widths(const QuasiNormContext& ctx, int k);

// Difference of two Gaussians in the normalized coordinates
// u = P A^-k (x - center), windowed by (1 - |u|^2)^3 on the unit ball,
// mean-corrected with the same window and scaled to sup b^-k (1 - 1e-6).
// The grid is the midpoint grid of the bounding box of center + Delta_k, so
// the samples do not depend on the center. Throws InvalidArgument for
// resolution < 64 and DegenerateProfile if the invariants cannot be met.
Atom make_atom(const QuasiNormContext& ctx, int k, const Point& center, std::uint64_t seed,
               int resolution);

// Support, sup and vanishing-moment checks on the samples.
struct AtomCheck {
  bool support_ok = false;
  bool sup_ok = false;
  bool moment_ok = false;
  double moment = 0.0;  // |integral| / L1 norm
};
AtomCheck check_atom(const Atom& atom, const QuasiNormContext& ctx);

// Base-shell points of A* Delta* minus Delta*, deterministic in the seed.
std::vector<Point> base_shell_points(const QuasiNormContext& adjoint, int count,
                                     std::uint64_t seed);

// Max of |a^(xi)| / (b^(k zeta_minus) rho*(xi)^zeta_minus) over
// samples_per_shell base points mapped to each of the shells
// j = -k-1, ..., -k-shells, where rho*(xi) = b^j. Throws NoValidFrequencies
// when no frequency is requested.
double verify_atom_decay(const Atom& atom, const QuasiNormContext& primal,
                         const QuasiNormContext& adjoint, int samples_per_shell, int shells,
                         std::uint64_t seed);

// (sum_i w_i |a^(x_i)|^p)^(1/p). Throws InvalidExponent for p < 1.
double pair_against_measure(const SampledFunction& f, const PointMeasure& mu, double p);

// sum over alpha != 0, |alpha_i| <= alpha_range, of the squared max of |a^|
// over the cell (A*)^-(k+N)(R*(alpha)), sampled on a subgrid x subgrid
// lattice per cell plus its center.
double cell_sup_l2(const Atom& atom, const GeometryContext& ctx, int k, int alpha_range,
                   int subgrid = 4);

// Inverse transform of (1 - |xi|^2)^lambda_+ in dimension d at radius r:
// Gamma(lambda + 1) / pi^lambda * J_(d/2+lambda)(2 pi r) / r^(d/2+lambda).
double bochner_riesz_kernel(double lambda, int d, double r);
std::vector<double> bochner_riesz_inverse(double lambda, int d, std::span<const double> radii);
// The same values by Gauss-Legendre quadrature of the radial integral.
double bochner_riesz_quadrature(double lambda, int d, double r);

struct ChiCheck {
  double max_error = 0.0;  // max |grid - closed form| / chi^(0)
  bool support_ok = false;
};

// Compares the grid transform of chi(x) = (1 - |P (A*)^-k x|^2)^lambda_+ with
// b^k / |det P| * m_lambda^(P^-T A^k xi), where Q* = P^T P.
ChiCheck chi_transform_check(const QuasiNormContext& adjoint, int k, double lambda,
                             std::span<const Point> frequencies, int resolution);

}  // namespace aniso
