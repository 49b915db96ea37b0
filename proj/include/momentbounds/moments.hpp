#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "momentbounds/errors.hpp"
#include "momentbounds/sample.hpp"

namespace momentbounds {

namespace detail {

/// Neumaier-compensated accumulator. Central moments of tight clusters lose
/// most of their digits to cancellation under plain summation.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + comp; }
};

}  // namespace detail

/// Central moments mu_r and raw moments mu'_r of a weighted sample, up to a
/// fixed order. mu_1 (central) is identically zero; order 0 is identically 1.
class MomentSet {
 public:
  MomentSet(double mean, std::vector<double> central, std::vector<double> raw,
            std::size_t n)
      : mean_(mean), central_(std::move(central)), raw_(std::move(raw)),
        n_(n) {}

  double mean() const { return mean_; }
  std::size_t n() const { return n_; }
  int max_order() const { return static_cast<int>(central_.size()) - 1; }
  bool has(int order) const {
    return order >= 0 && order < static_cast<int>(central_.size());
  }

  /// mu_r. Throws MissingMomentError when the order was not computed.
  double central(int order) const {
    check(order);
    return central_[static_cast<std::size_t>(order)];
  }

  /// mu'_r (moment about the origin).
  double raw(int order) const {
    check(order);
    return raw_[static_cast<std::size_t>(order)];
  }

 private:
  void check(int order) const {
    if (!has(order)) {
      throw MissingMomentError("moment of order " + std::to_string(order) +
                               " not computed (max order " +
                               std::to_string(max_order()) + ")");
    }
  }

  double mean_;
  std::vector<double> central_;
  std::vector<double> raw_;
  std::size_t n_;
};

/// Normalized shape statistics of a sample with positive variance.
struct ShapeStats {
  double skewness = 0.0;           ///< mu_3 / mu_2^{3/2}, signed
  double kurtosis = 0.0;           ///< mu_4 / mu_2^2
  double studentized_range = 0.0;  ///< (M - m) / sqrt(mu_2)
  double std_dev = 0.0;            ///< sqrt(mu_2)
};

/// Computes mu_r = sum p_i (x_i - mean)^r and mu'_r = sum p_i x_i^r for
/// r <= max_order. Two passes: the mean first, then compensated sums of
/// deviation powers around it.
inline MomentSet compute_moments(const Sample& sample, int max_order) {
  if (max_order < 2) throw Error("max_order must be at least 2");
  const auto pts = sample.points();
  const auto wts = sample.weights();

  detail::CompensatedSum mean_acc;
  for (std::size_t i = 0; i < pts.size(); ++i) mean_acc.add(wts[i] * pts[i]);
  const double mean = mean_acc.value();

  const auto orders = static_cast<std::size_t>(max_order) + 1;
  std::vector<detail::CompensatedSum> central_acc(orders);
  std::vector<detail::CompensatedSum> raw_acc(orders);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double d = pts[i] - mean;
    double dpow = d;
    double xpow = pts[i];
    for (std::size_t r = 1; r < orders; ++r) {
      central_acc[r].add(wts[i] * dpow);
      raw_acc[r].add(wts[i] * xpow);
      dpow *= d;
      xpow *= pts[i];
    }
  }

  std::vector<double> central(orders), raw(orders);
  central[0] = 1.0;
  raw[0] = 1.0;
  for (std::size_t r = 1; r < orders; ++r) {
    central[r] = central_acc[r].value();
    raw[r] = raw_acc[r].value();
    // Even central moments are non-negative; stamp out roundoff residue.
    if (r % 2 == 0 && central[r] < 0.0) central[r] = 0.0;
  }
  central[1] = 0.0;  // definitional
  return MomentSet(mean, std::move(central), std::move(raw), sample.size());
}

/// Rebuilds central moments up to order 4 from raw moments via the standard
/// binomial identities (mu_2 = mu'_2 - mu'_1^2, and so on).
inline MomentSet central_from_raw(const MomentSet& m) {
  if (!m.has(4)) {
    throw MissingMomentError("central_from_raw needs raw moments up to order 4");
  }
  const double m1 = m.raw(1);
  const double m2 = m.raw(2);
  const double m3 = m.raw(3);
  const double m4 = m.raw(4);
  std::vector<double> central(5), raw(5);
  central[0] = 1.0;
  central[1] = 0.0;
  central[2] = m2 - m1 * m1;
  central[3] = m3 - 3.0 * m1 * m2 + 2.0 * m1 * m1 * m1;
  central[4] = m4 - 4.0 * m1 * m3 + 6.0 * m1 * m1 * m2 - 3.0 * m1 * m1 * m1 * m1;
  raw[0] = 1.0;
  for (int r = 1; r <= 4; ++r) raw[static_cast<std::size_t>(r)] = m.raw(r);
  return MomentSet(m1, std::move(central), std::move(raw), m.n());
}

/// Skewness, kurtosis and studentized range. Requires mu_2 > 0.
inline ShapeStats shape_stats(const MomentSet& m, Interval interval) {
  const double mu2 = m.central(2);
  if (mu2 <= 0.0) {
    throw DegenerateSampleError("shape statistics need positive variance");
  }
  const double sd = std::sqrt(mu2);
  ShapeStats s;
  s.std_dev = sd;
  s.skewness = m.central(3) / (mu2 * sd);
  s.kurtosis = m.central(4) / (mu2 * mu2);
  s.studentized_range = interval.width() / sd;
  return s;
}

}  // namespace momentbounds
