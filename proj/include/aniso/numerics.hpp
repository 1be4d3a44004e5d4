#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace aniso {

// Neumaier-compensated running sum. Order of add() calls fixes the result
// bit for bit.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendre& gauss_legendre(int order);

// Composite Gauss-Legendre integration of f over [a, b] with `panels`
// equal panels of the given order.
double integrate(const std::function<double(double)>& f, double a, double b, int panels,
                 int order = 20);

// C-infinity step: 0 for t <= 0, 1 for t >= 1, phi(t)/(phi(t)+phi(1-t)) with
// phi(t) = exp(-1/t) in between.
double smooth_step(double t) noexcept;

// Uniform double in [0, 1) from the top 53 bits. Avoids std distributions,
// whose output is implementation defined.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}
double standard_normal(std::mt19937_64& rng);

// Additive-recurrence low-discrepancy sequence in [0,1)^dim (golden ratio for
// dim 1, the plastic-number R2 sequence for dim 2), rotated by a seeded offset.
class LowDiscrepancy {
 public:
  LowDiscrepancy(int dim, std::uint64_t seed);
  std::array<double, 2> next();

 private:
  int dim_;
  std::array<double, 2> state_{};
  std::array<double, 2> step_{};
};

// Worker count: ANISO_THREADS when set (>= 1), else hardware concurrency.
unsigned worker_count();

// Runs body(i) for i in [0, n), split into contiguous blocks across threads.
// Each index is handled by exactly one call, so results written per index are
// independent of the thread count. The first exception thrown by any block is
// rethrown after all threads join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace aniso
