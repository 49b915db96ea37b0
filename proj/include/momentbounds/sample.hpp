#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "momentbounds/errors.hpp"

namespace momentbounds {

/// Closed interval [lo, hi] known to contain a sample or a spectrum.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
};

/// A finite weighted point set supported on an interval [m, M].
///
/// Invariants enforced at construction:
///   - at least one point, all values finite;
///   - weights non-negative and summing to 1 within 1e-12 (or renormalized
///     when explicitly requested);
///   - interval contains every point.
///
/// Immutable after construction; safe to share across threads.
class Sample {
 public:
  static constexpr double kWeightSumTol = 1e-12;

  /// Uniform weights 1/n, interval defaulted to the data range. An explicit
  /// interval goes through the weighted constructors (empty weights = uniform).
  explicit Sample(std::vector<double> points)
      : Sample(std::move(points), std::vector<double>{}, false) {}

  /// Weighted sample, interval defaulted to the data range. An empty weight
  /// vector means uniform. Unnormalized weights are rejected unless
  /// `renormalize` is set.
  Sample(std::vector<double> points, std::vector<double> weights,
         bool renormalize = false)
      : points_(std::move(points)), weights_(std::move(weights)) {
    validate_points();
    interval_ = data_range();
    finish_weights(renormalize);
  }

  /// Weighted sample over an explicit interval.
  Sample(std::vector<double> points, std::vector<double> weights,
         Interval interval, bool renormalize = false)
      : points_(std::move(points)), weights_(std::move(weights)),
        interval_(interval) {
    validate_points();
    if (!std::isfinite(interval_.lo) || !std::isfinite(interval_.hi)) {
      throw Error("sample interval must be finite");
    }
    const Interval range = data_range();
    if (interval_.lo > range.lo || interval_.hi < range.hi) {
      throw Error("sample interval does not contain all points");
    }
    finish_weights(renormalize);
  }

  std::span<const double> points() const { return points_; }
  std::span<const double> weights() const { return weights_; }
  const Interval& interval() const { return interval_; }
  std::size_t size() const { return points_.size(); }

  /// True when every weight equals 1/n within 1e-12. The Nagy-family bounds
  /// are stated for plain (unweighted) point sets and check this.
  bool uniform_weights() const { return uniform_; }

  /// Smallest interval containing the points (the attained range).
  Interval data_range() const {
    const auto [lo, hi] = std::minmax_element(points_.begin(), points_.end());
    return Interval{*lo, *hi};
  }

 private:
  void validate_points() const {
    if (points_.empty()) {
      throw EmptyInputError("sample must contain at least one point");
    }
    for (double x : points_) {
      if (!std::isfinite(x)) throw Error("sample points must be finite");
    }
  }

  void finish_weights(bool renormalize) {
    const std::size_t n = points_.size();
    if (weights_.empty()) {
      weights_.assign(n, 1.0 / static_cast<double>(n));
      uniform_ = true;
      return;
    }
    if (weights_.size() != n) {
      throw Error("weights and points must have the same length");
    }
    double sum = 0.0;
    for (double w : weights_) {
      if (!std::isfinite(w)) throw Error("weights must be finite");
      if (w < 0.0) throw Error("weights must be non-negative");
      sum += w;
    }
    if (renormalize) {
      if (sum <= 0.0) throw NormalizationError("total weight must be positive");
      for (double& w : weights_) w /= sum;
    } else if (std::abs(sum - 1.0) > kWeightSumTol) {
      throw NormalizationError("weights sum to " + std::to_string(sum) +
                               ", expected 1 (pass renormalize to accept)");
    }
    const double even = 1.0 / static_cast<double>(n);
    uniform_ = std::all_of(weights_.begin(), weights_.end(), [&](double w) {
      return std::abs(w - even) <= 1e-12;
    });
  }

  std::vector<double> points_;
  std::vector<double> weights_;
  Interval interval_;
  bool uniform_ = false;
};

}  // namespace momentbounds
