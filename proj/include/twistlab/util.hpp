#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>

namespace twistlab {

/// Deterministic random stream. The raw mt19937_64 sequence is pinned by the
/// standard; the mapping to doubles is explicit so that output does not depend
/// on library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1].
  double uniform_pm1() { return 2.0 * uniform01() - 1.0; }

  Eigen::VectorXd vector_pm1(Eigen::Index n) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = uniform_pm1();
    return v;
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t value);

/// Adaptive Simpson quadrature on a finite interval.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10, int max_depth = 40);

}  // namespace twistlab
