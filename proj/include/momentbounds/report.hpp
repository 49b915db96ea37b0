#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>

namespace momentbounds {

enum class Direction { Upper, Lower };

inline std::string_view to_string(Direction d) {
  return d == Direction::Upper ? "upper" : "lower";
}

/// One evaluated inequality instance. An Upper report claims lhs <= rhs, a
/// Lower report claims lhs >= rhs; slack is non-negative exactly when the
/// claim holds. Inapplicable reports (hypotheses not met) carry NaN values
/// and a note instead of raising.
struct BoundReport {
  std::string name;
  Direction direction = Direction::Upper;
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  double slack = std::numeric_limits<double>::quiet_NaN();
  bool applicable = true;
  std::string note;
};

inline BoundReport make_report(std::string name, Direction dir, double lhs,
                               double rhs, std::string note = {}) {
  BoundReport r;
  r.name = std::move(name);
  r.direction = dir;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = dir == Direction::Upper ? rhs - lhs : lhs - rhs;
  r.applicable = true;
  r.note = std::move(note);
  return r;
}

inline BoundReport not_applicable(std::string name, Direction dir,
                                  std::string note) {
  BoundReport r;
  r.name = std::move(name);
  r.direction = dir;
  r.applicable = false;
  r.note = std::move(note);
  return r;
}

/// Uniform slack tolerance used across the suite: rel * max(1, |lhs|, |rhs|).
inline double slack_tolerance(const BoundReport& r, double rel = 1e-9) {
  return rel * std::max({1.0, std::abs(r.lhs), std::abs(r.rhs)});
}

/// True when the report is inapplicable or its claim holds within tolerance.
inline bool holds(const BoundReport& r, double rel = 1e-9) {
  return !r.applicable || r.slack >= -slack_tolerance(r, rel);
}

/// Fixed registry of inequality identifiers the sample suite can emit.
inline const std::array<std::string_view, 19>& inequality_names() {
  static const std::array<std::string_view, 19> names = {
      "popoviciu",            // variance upper bound
      "nagy",                 // variance lower bound, uniform samples
      "mu3_lower",            // third-moment lower bound
      "mu3_upper",            // third-moment upper bound
      "popoviciu_refined",    // variance + (mu3/2mu2)^2 upper bound
      "mu4_range",            // fourth-moment range bound
      "mu4_mean_range",       // fourth-moment bound through the mean
      "pearson",              // fourth-moment lower bound
      "mu4_refined",          // fourth-moment upper bound via mu2, mu3
      "hankel_gap",           // mu2*mu4 - mu2^3 - mu3^2 upper bound
      "pearson_gap",          // mu4 - mu2^2 - mu3^2/mu2 upper bound
      "kurtosis_range",       // kurtosis - skewness^2 vs studentized range
      "kurtosis_range_sharp", // same gap against (M-m)^2/(4 mu2)
      "mu3_range",            // |mu3| range bound
      "nagy_general_r2",      // generalized Nagy, r = 2
      "nagy_power_r2",        // simplified generalized Nagy, r = 2
      "nagy_general_r3",      // generalized Nagy, r = 3
      "nagy_power_r3",        // simplified generalized Nagy, r = 3
      "hankel_psd",           // 2x2 moment determinant for 0 <= A <= M I
  };
  return names;
}

}  // namespace momentbounds
