#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "momentbounds/errors.hpp"
#include "momentbounds/oracle/sturm.hpp"
#include "momentbounds/polynomial.hpp"
#include "momentbounds/report.hpp"

namespace momentbounds {

/// One bound on the span (largest minus smallest root) of a real-rooted
/// monic polynomial.
struct SpanBound {
  std::string name;
  double value = 0.0;
  Direction direction = Direction::Lower;
  bool applicable = true;
  std::string note;
};

/// Span bounds for one polynomial; `exact` is set in verify mode.
struct SpanReport {
  std::vector<SpanBound> bounds;
  std::optional<double> exact;
  double shift = 0.0;  ///< depression shift t (q(y) = p(y + t))
};

namespace detail {

/// For a real-rooted depressed polynomial these quantities are non-negative
/// by construction; anything clearly negative betrays complex roots.
inline double require_nonneg(double v, const char* what) {
  if (v < -1e-12 * (1.0 + std::abs(v))) {
    throw RealRootednessViolation(std::string(what) +
                                  " is negative: roots cannot all be real");
  }
  return std::max(v, 0.0);
}

}  // namespace detail

/// spn(f) <= 2 sqrt(-a_2): the variance lower bound read backwards.
inline SpanBound span_upper_nagy(const PowerSums& ps) {
  const double m2 = detail::require_nonneg(ps.m2, "second power-sum moment");
  const double n = static_cast<double>(ps.n);
  return {"nagy_upper", 2.0 * std::sqrt(n * m2 / 2.0), Direction::Upper, true, {}};
}

/// spn(f) >= 2 sqrt(-2 a_2 / n): the variance upper bound read backwards.
inline SpanBound span_lower_popoviciu(const PowerSums& ps) {
  const double m2 = detail::require_nonneg(ps.m2, "second power-sum moment");
  return {"popoviciu_lower", 2.0 * std::sqrt(m2), Direction::Lower, true, {}};
}

/// Fourth-moment span bracket:
///   (24 (a_2^2 - 2 a_4) / n)^{1/4} <= spn(f) <= 2 (a_2^2 - 2 a_4)^{1/4}.
/// The lower member is stated for n >= 5 and flagged inapplicable below that.
inline std::pair<SpanBound, SpanBound> span_fourth(const PowerSums& ps) {
  const double m4 = detail::require_nonneg(ps.m4, "fourth power-sum moment");
  const double n = static_cast<double>(ps.n);
  SpanBound lower{"fourth_lower", std::pow(12.0 * m4, 0.25), Direction::Lower,
                  ps.n >= 5, ps.n >= 5 ? std::string{} : "stated for degree >= 5"};
  // 2 (a_2^2 - 2 a_4)^{1/4}, written through m4 = (2/n)(a_2^2 - 2 a_4).
  SpanBound upper{"fourth_upper", 2.0 * std::pow(n * m4 / 2.0, 0.25),
                  Direction::Upper, true, {}};
  return {std::move(lower), std::move(upper)};
}

/// Sixth-moment span lower bound
///   spn(f) >= ((432/n^3)(4(2-n) a_2^3 - 9 n a_3^2 + 8 n a_2 a_4))^{1/6},
/// cross-checked against the equivalent moment form
///   (432 (m_2 m_4 - m_2^3 - m_3^2))^{1/6}.
/// Stated for n >= 5; a roundoff-negative inner value clamps to zero.
inline SpanBound span_lower_sixth(const PowerSums& ps) {
  const double n = static_cast<double>(ps.n);
  const double coeff_form =
      432.0 / (n * n * n) *
      (4.0 * (2.0 - n) * ps.a2 * ps.a2 * ps.a2 - 9.0 * n * ps.a3 * ps.a3 +
       8.0 * n * ps.a2 * ps.a4);
  const double moment_form =
      432.0 * (ps.m2 * ps.m4 - ps.m2 * ps.m2 * ps.m2 - ps.m3 * ps.m3);
  const double term_scale =
      432.0 * std::max({1e-300, std::abs(ps.m2 * ps.m4),
                        std::abs(ps.m2 * ps.m2 * ps.m2), ps.m3 * ps.m3});
  if (std::abs(coeff_form - moment_form) > 1e-9 * std::max(1.0, term_scale)) {
    throw VerificationError("sixth-moment bound: coefficient and moment forms disagree");
  }
  double inner = coeff_form;
  // Degenerate (two-point) root multisets zero the determinant exactly; do
  // not let the sixth root inflate cancellation residue.
  if (std::abs(inner) <= 1e-12 * term_scale) inner = 0.0;
  std::string note;
  if (inner < 0.0) {
    inner = 0.0;
    note = "inner expression clamped to 0";
  }
  SpanBound b{"sixth_lower", std::pow(inner, 1.0 / 6.0), Direction::Lower,
              ps.n >= 5, std::move(note)};
  if (ps.n < 5) {
    b.note = b.note.empty() ? "stated for degree >= 5"
                            : b.note + "; stated for degree >= 5";
  }
  return b;
}

/// Depresses p, evaluates every span bound, and (in verify mode) checks the
/// whole bracket against the Sturm oracle: real-rootedness, then
/// lower <= exact span <= upper for each applicable bound.
inline SpanReport span_report(const Polynomial& p, bool verify = false) {
  SpanReport report;
  if (p.degree() == 1) {
    // Single root: the span is zero and every moment-based bound collapses.
    report.bounds = {
        {"nagy_upper", 0.0, Direction::Upper, true, {}},
        {"popoviciu_lower", 0.0, Direction::Lower, true, {}},
        {"fourth_lower", 0.0, Direction::Lower, false, "stated for degree >= 5"},
        {"fourth_upper", 0.0, Direction::Upper, true, {}},
        {"sixth_lower", 0.0, Direction::Lower, false, "stated for degree >= 5"},
    };
    if (verify) report.exact = 0.0;
    return report;
  }

  auto [depressed, shift] = depress(p);
  report.shift = shift;
  const PowerSums ps = power_sums(depressed);
  report.bounds.push_back(span_upper_nagy(ps));
  report.bounds.push_back(span_lower_popoviciu(ps));
  auto [f_lower, f_upper] = span_fourth(ps);
  report.bounds.push_back(std::move(f_lower));
  report.bounds.push_back(std::move(f_upper));
  report.bounds.push_back(span_lower_sixth(ps));

  if (verify) {
    const oracle::RootSet roots = oracle::sturm_real_roots(p);
    if (roots.real_count() != p.degree()) {
      throw RealRootednessViolation(
          "span bounds assume real roots; Sturm count is " +
          std::to_string(roots.real_count()) + " of " +
          std::to_string(p.degree()));
    }
    const double exact = roots.roots.back() - roots.roots.front();
    report.exact = exact;
    const double tol = 1e-8 * std::max(1.0, exact);
    for (const SpanBound& b : report.bounds) {
      if (!b.applicable) continue;
      const bool ok = b.direction == Direction::Lower ? b.value <= exact + tol
                                                      : b.value >= exact - tol;
      if (!ok) {
        throw VerificationError("span bound " + b.name +
                                " violates the oracle bracket");
      }
    }
  }
  return report;
}

}  // namespace momentbounds
