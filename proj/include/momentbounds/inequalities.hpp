#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "momentbounds/errors.hpp"
#include "momentbounds/moments.hpp"
#include "momentbounds/report.hpp"
#include "momentbounds/sample.hpp"

namespace momentbounds {

namespace detail {

inline double ipow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

inline std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace detail

/// Popoviciu: mu_2 <= (M - m)^2 / 4.
inline BoundReport popoviciu_upper(const MomentSet& m, Interval iv) {
  const double w = iv.width();
  return make_report("popoviciu", Direction::Upper, m.central(2), w * w / 4.0);
}

/// Nagy: m_2 >= (M - m)^2 / (2n) for n plain real numbers whose min and max
/// are the interval endpoints. Weighted samples are flagged inapplicable.
inline BoundReport nagy_lower(const MomentSet& m, Interval iv,
                              bool uniform_weights) {
  if (!uniform_weights) {
    return not_applicable("nagy", Direction::Lower,
                          "stated for uniform-weight samples");
  }
  const double w = iv.width();
  const double n = static_cast<double>(m.n());
  return make_report("nagy", Direction::Lower, m.central(2), w * w / (2.0 * n));
}

/// Two-sided third-moment bound:
/// (mu_2^2 - a^2 mu_2)/a <= mu_3 <= (b^2 mu_2 - mu_2^2)/b
/// with a = mean - m, b = M - mean, both required positive.
inline std::pair<BoundReport, BoundReport> mu3_two_sided(const MomentSet& m,
                                                         Interval iv) {
  const double a = m.mean() - iv.lo;
  const double b = iv.hi - m.mean();
  if (a <= 0.0 || b <= 0.0) {
    return {not_applicable("mu3_lower", Direction::Lower, "mean at interval endpoint"),
            not_applicable("mu3_upper", Direction::Upper, "mean at interval endpoint")};
  }
  const double mu2 = m.central(2);
  const double mu3 = m.central(3);
  return {make_report("mu3_lower", Direction::Lower, mu3,
                      (mu2 * mu2 - a * a * mu2) / a),
          make_report("mu3_upper", Direction::Upper, mu3,
                      (b * b * mu2 - mu2 * mu2) / b)};
}

/// Refined Popoviciu: sigma^2 + (mu_3 / (2 sigma^2))^2 <= (M - m)^2 / 4.
inline BoundReport popoviciu_refined(const MomentSet& m, Interval iv) {
  const double mu2 = m.central(2);
  if (mu2 <= 0.0) {
    return not_applicable("popoviciu_refined", Direction::Upper, "zero variance");
  }
  const double half_ratio = m.central(3) / (2.0 * mu2);
  const double w = iv.width();
  return make_report("popoviciu_refined", Direction::Upper,
                     mu2 + half_ratio * half_ratio, w * w / 4.0);
}

/// Fourth-moment range bound mu_4 <= (M - m)^4 / 12, plus the sharper
/// mean-dependent form mu_4 <= ab(a^2 + b^2 - ab) it is derived from.
inline std::pair<BoundReport, BoundReport> mu4_range_upper(const MomentSet& m,
                                                           Interval iv) {
  const double w = iv.width();
  const double a = m.mean() - iv.lo;
  const double b = iv.hi - m.mean();
  const double mu4 = m.central(4);
  return {make_report("mu4_range", Direction::Upper, mu4,
                      detail::ipow(w, 4) / 12.0),
          make_report("mu4_mean_range", Direction::Upper, mu4,
                      a * b * (a * a + b * b - a * b))};
}

/// Pearson: mu_4 >= mu_3^2 / mu_2 + mu_2^2.
inline BoundReport pearson_lower(const MomentSet& m) {
  const double mu2 = m.central(2);
  if (mu2 <= 0.0) {
    return not_applicable("pearson", Direction::Lower, "zero variance");
  }
  const double mu3 = m.central(3);
  return make_report("pearson", Direction::Lower, m.central(4),
                     mu3 * mu3 / mu2 + mu2 * mu2);
}

/// Fourth-moment upper bound through mu_2 and mu_3:
/// mu_4 <= ab mu_2 + (m + M - 2 mean) mu_3 - (mu_3 - (m + M - 2 mean) mu_2)^2 / (ab - mu_2).
/// The bound degenerates when mu_2 = ab (two-point distributions), which the
/// guard |ab - mu_2| > 1e-10 (M - m)^2 flags as inapplicable.
inline BoundReport mu4_upper_refined(const MomentSet& m, Interval iv) {
  const double a = m.mean() - iv.lo;
  const double b = iv.hi - m.mean();
  const double mu2 = m.central(2);
  const double gap = a * b - mu2;
  const double w = iv.width();
  if (std::abs(gap) <= 1e-10 * w * w) {
    return not_applicable("mu4_refined", Direction::Upper, "two-point distribution");
  }
  const double c = iv.lo + iv.hi - 2.0 * m.mean();
  const double mu3 = m.central(3);
  const double num = mu3 - c * mu2;
  return make_report("mu4_refined", Direction::Upper, m.central(4),
                     a * b * mu2 + c * mu3 - num * num / gap);
}

/// Complement of Pearson for the Hankel gap:
/// mu_2 mu_4 - mu_2^3 - mu_3^2 <= (ab(M - m))^2 / 27 <= (M - m)^6 / 432.
/// The report carries the first (sharper) bound; the range-only form is noted.
inline BoundReport hankel_gap_upper(const MomentSet& m, Interval iv) {
  const double a = m.mean() - iv.lo;
  const double b = iv.hi - m.mean();
  const double mu2 = m.central(2);
  const double mu3 = m.central(3);
  const double lhs = mu2 * m.central(4) - mu2 * mu2 * mu2 - mu3 * mu3;
  const double r1 = detail::ipow(a * b * iv.width(), 2) / 27.0;
  const double r2 = detail::ipow(iv.width(), 6) / 432.0;
  return make_report("hankel_gap", Direction::Upper, lhs, r1,
                     "range form: " + detail::short_number(r2));
}

/// Second Pearson complement:
/// mu_4 - mu_2^2 - mu_3^2/mu_2 <= ab((M - m)/4)^2 <= (M - m)^4 / 64.
inline BoundReport pearson_gap_upper(const MomentSet& m, Interval iv) {
  const double mu2 = m.central(2);
  if (mu2 <= 0.0) {
    return not_applicable("pearson_gap", Direction::Upper, "zero variance");
  }
  const double a = m.mean() - iv.lo;
  const double b = iv.hi - m.mean();
  const double mu3 = m.central(3);
  const double lhs = m.central(4) - mu2 * mu2 - mu3 * mu3 / mu2;
  const double quarter = iv.width() / 4.0;
  const double r2 = detail::ipow(iv.width(), 4) / 64.0;
  return make_report("pearson_gap", Direction::Upper, lhs,
                     a * b * quarter * quarter,
                     "range form: " + detail::short_number(r2));
}

/// Kurtosis, skewness and studentized range: alpha_4 - alpha_3^2 <= q^2 / 4,
/// plus the moment form mu_4/mu_2^2 - mu_3^2/mu_2^3 <= (M - m)^2 / (4 mu_2)
/// it follows from. For weighted samples the distribution moments stand in
/// for the plain sample moments (the proof only uses those).
inline std::pair<BoundReport, BoundReport> kurtosis_skewness_range(
    const MomentSet& m, Interval iv, bool uniform_weights = true) {
  const double mu2 = m.central(2);
  if (mu2 <= 0.0) {
    return {not_applicable("kurtosis_range", Direction::Upper, "zero variance"),
            not_applicable("kurtosis_range_sharp", Direction::Upper, "zero variance")};
  }
  const ShapeStats s = shape_stats(m, iv);
  const double q = s.studentized_range;
  std::string note = uniform_weights ? std::string{}
                                     : "weighted sample: distribution moments";
  const double mu3 = m.central(3);
  const double w = iv.width();
  return {make_report("kurtosis_range", Direction::Upper,
                      s.kurtosis - s.skewness * s.skewness, q * q / 4.0, note),
          make_report("kurtosis_range_sharp", Direction::Upper,
                      m.central(4) / (mu2 * mu2) - mu3 * mu3 / (mu2 * mu2 * mu2),
                      w * w / (4.0 * mu2), std::move(note))};
}

/// Third-moment range bound |mu_3| <= (M - m)^3 / (6 sqrt 3).
inline BoundReport mu3_range_upper(const MomentSet& m, Interval iv) {
  return make_report("mu3_range", Direction::Upper, std::abs(m.central(3)),
                     detail::ipow(iv.width(), 3) / (6.0 * std::sqrt(3.0)));
}

/// Generalized Nagy bound for even central moments of n plain real numbers
/// whose min and max are the interval endpoints:
///   m_{2r} >= (M-m)^{2r} / (2^{2r-1} n) + (n/(n-2))^{r-1} (m_2 - (M-m)^2/(2n))^r,
/// together with the simplified range-only form (the first term alone).
/// For n < 3 only the simplified form applies (it is an equality at n = 2).
inline std::vector<BoundReport> nagy_generalized_lower(const MomentSet& m,
                                                       Interval iv, int r,
                                                       bool uniform_weights) {
  if (r < 1) throw Error("generalized Nagy bound needs r >= 1");
  const std::string suffix = "_r" + std::to_string(r);
  const std::string general = "nagy_general" + suffix;
  const std::string simple = "nagy_power" + suffix;
  const auto n_int = m.n();
  std::vector<BoundReport> out;
  if (!uniform_weights) {
    if (n_int >= 3) {
      out.push_back(not_applicable(general, Direction::Lower,
                                   "stated for uniform-weight samples"));
    }
    out.push_back(not_applicable(simple, Direction::Lower,
                                 "stated for uniform-weight samples"));
    return out;
  }
  const double n = static_cast<double>(n_int);
  const double w = iv.width();
  const double m2r = m.central(2 * r);
  const double range_term = detail::ipow(w, 2 * r) / (detail::ipow(2.0, 2 * r - 1) * n);
  if (n_int >= 3) {
    const double excess = m.central(2) - w * w / (2.0 * n);
    const double rhs = range_term +
                       detail::ipow(n / (n - 2.0), r - 1) * detail::ipow(excess, r);
    out.push_back(make_report(general, Direction::Lower, m2r, rhs));
    out.push_back(make_report(simple, Direction::Lower, m2r, range_term));
  } else {
    out.push_back(make_report(simple, Direction::Lower, m2r, range_term,
                              n_int == 2 ? "n=2 equality" : std::string{}));
  }
  return out;
}

/// Evaluates the full inequality suite on one sample. Inapplicable bounds are
/// flagged, never raised, so the output is total for any valid sample.
///
/// The Nagy-family bounds are evaluated on the attained data range (their
/// hypotheses place points at both endpoints); all other bounds use the
/// sample's declared interval.
inline std::vector<BoundReport> run_suite(const Sample& sample) {
  const MomentSet m = compute_moments(sample, 6);
  const Interval iv = sample.interval();
  const Interval range = sample.data_range();
  const bool uniform = sample.uniform_weights();
  const bool shrunk =
      range.lo != iv.lo || range.hi != iv.hi;

  std::vector<BoundReport> reports;
  reports.reserve(18);
  auto note_range = [&](BoundReport r) {
    if (shrunk && r.applicable) {
      r.note = r.note.empty() ? "evaluated on data range"
                              : r.note + "; evaluated on data range";
    }
    return r;
  };

  reports.push_back(popoviciu_upper(m, iv));
  reports.push_back(note_range(nagy_lower(m, range, uniform)));
  auto [mu3_lo, mu3_hi] = mu3_two_sided(m, iv);
  reports.push_back(std::move(mu3_lo));
  reports.push_back(std::move(mu3_hi));
  reports.push_back(popoviciu_refined(m, iv));
  auto [mu4_range, mu4_mean] = mu4_range_upper(m, iv);
  reports.push_back(std::move(mu4_range));
  reports.push_back(std::move(mu4_mean));
  reports.push_back(pearson_lower(m));
  reports.push_back(mu4_upper_refined(m, iv));
  reports.push_back(hankel_gap_upper(m, iv));
  reports.push_back(pearson_gap_upper(m, iv));
  auto [kurt, kurt_sharp] = kurtosis_skewness_range(m, iv, uniform);
  reports.push_back(std::move(kurt));
  reports.push_back(std::move(kurt_sharp));
  reports.push_back(mu3_range_upper(m, iv));
  for (int r : {2, 3}) {
    for (auto& rep : nagy_generalized_lower(m, range, r, uniform)) {
      reports.push_back(note_range(std::move(rep)));
    }
  }
  return reports;
}

}  // namespace momentbounds
