#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "momentbounds/matrix.hpp"
#include "momentbounds/polynomial.hpp"
#include "momentbounds/sample.hpp"

namespace momentbounds::oracle {

/// Deterministic random stream. Doubles are derived from the raw mt19937_64
/// output directly (std::uniform_real_distribution is not pinned across
/// standard libraries, and fuzz counterexamples must replay bit-exactly).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Weighted samples with n in [1, 12]: mixed uniform/random weights, points
/// in a bounded window, occasionally degenerate (all points equal) or with a
/// declared interval wider than the data range.
class SampleGenerator {
 public:
  explicit SampleGenerator(std::uint64_t seed) : rng_(seed) {}

  Sample next() {
    const int n = rng_.uniform_int(1, 12);
    const double center = rng_.uniform(-5.0, 5.0);
    const double half = rng_.uniform(0.1, 5.0);
    std::vector<double> pts(static_cast<std::size_t>(n));
    if (rng_.chance(0.05)) {
      const double x = rng_.uniform(center - half, center + half);
      for (double& p : pts) p = x;
    } else {
      for (double& p : pts) p = rng_.uniform(center - half, center + half);
    }
    std::vector<double> wts;
    if (rng_.chance(0.5)) {
      wts.resize(pts.size());
      for (double& w : wts) w = rng_.uniform(0.05, 1.0);
    }
    if (rng_.chance(0.3)) {
      Interval iv{center - half - rng_.uniform(0.0, 2.0),
                  center + half + rng_.uniform(0.0, 2.0)};
      return Sample(std::move(pts), std::move(wts), iv, /*renormalize=*/true);
    }
    return Sample(std::move(pts), std::move(wts), /*renormalize=*/true);
  }

 private:
  Rng rng_;
};

/// Real symmetric matrices with n in [2, 8] and entries in [-5, 5],
/// symmetrized exactly by construction.
class MatrixGenerator {
 public:
  explicit MatrixGenerator(std::uint64_t seed) : rng_(seed) {}

  SquareMatrix next() {
    const auto n = static_cast<std::size_t>(rng_.uniform_int(2, 8));
    SquareMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const double v = rng_.uniform(-5.0, 5.0);
        a.at(i, j) = v;
        a.at(j, i) = v;
      }
    }
    return a;
  }

 private:
  Rng rng_;
};

/// Real-rooted polynomial together with the roots it was expanded from.
struct PolynomialInstance {
  Polynomial poly;
  std::vector<double> roots;  ///< sorted ascending
};

/// Monic polynomials of degree 2..8 expanded from explicit random roots in
/// [-10, 10]; real-rootedness holds by construction.
class PolynomialGenerator {
 public:
  explicit PolynomialGenerator(std::uint64_t seed) : rng_(seed) {}

  PolynomialInstance next() {
    const int degree = rng_.uniform_int(2, 8);
    std::vector<double> roots(static_cast<std::size_t>(degree));
    for (double& r : roots) r = rng_.uniform(-10.0, 10.0);
    std::sort(roots.begin(), roots.end());
    std::vector<double> coeffs{1.0};
    for (double r : roots) {
      coeffs.push_back(0.0);
      for (std::size_t k = coeffs.size() - 1; k >= 1; --k) {
        coeffs[k] -= r * coeffs[k - 1];
      }
    }
    return {Polynomial(std::move(coeffs)), std::move(roots)};
  }

 private:
  Rng rng_;
};

}  // namespace momentbounds::oracle
