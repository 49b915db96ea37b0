#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>

#include "momentbounds/inequalities.hpp"
#include "momentbounds/oracle/generators.hpp"
#include "momentbounds/oracle/jacobi.hpp"
#include "momentbounds/oracle/sturm.hpp"
#include "momentbounds/span.hpp"
#include "momentbounds/spread.hpp"

namespace momentbounds {

/// Randomized soundness sweep: sample inequality suite against its own slack
/// tolerance, spread estimates against the Jacobi oracle, span bounds against
/// the Sturm oracle. Stops at the first counterexample.
struct FuzzConfig {
  std::uint64_t seed = 1;
  int samples = 10000;
  int matrices = 1000;
  int polynomials = 1000;
  double slack_rel = 1e-9;   ///< relative slack tolerance for BoundReports
  double spread_tol = 1e-8;  ///< absolute tolerance against the Jacobi spread
  double span_rel = 1e-8;    ///< relative tolerance against the Sturm span
};

struct FuzzViolation {
  std::string category;  ///< "sample", "matrix" or "polynomial"
  std::uint64_t seed = 0;
  int index = 0;
  std::string detail;
};

struct FuzzResult {
  int samples_checked = 0;
  int reports_checked = 0;
  int sandwich_checked = 0;
  int chains_checked = 0;
  int matrices_checked = 0;
  int estimates_checked = 0;
  int polynomials_checked = 0;
  int span_bounds_checked = 0;
  std::optional<FuzzViolation> violation;

  bool ok() const { return !violation.has_value(); }
};

namespace detail {

inline std::string describe_sample(const Sample& s) {
  std::ostringstream os;
  os << "n=" << s.size() << " interval=[" << s.interval().lo << ","
     << s.interval().hi << "] points=[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    os << (i ? "," : "") << s.points()[i];
  }
  os << "]";
  return os.str();
}

}  // namespace detail

inline FuzzResult run_fuzz(const FuzzConfig& cfg) {
  FuzzResult res;
  auto fail = [&](std::string category, int index, std::string detail) {
    res.violation = FuzzViolation{std::move(category), cfg.seed, index,
                                  std::move(detail)};
  };

  oracle::SampleGenerator samples(cfg.seed);
  for (int i = 0; i < cfg.samples && !res.violation; ++i) {
    const Sample s = samples.next();
    ++res.samples_checked;
    const auto reports = run_suite(s);

    double pearson_rhs = 0.0, mu4 = 0.0, refined_rhs = 0.0;
    bool pearson_ok = false, refined_ok = false;
    for (const BoundReport& r : reports) {
      if (!r.applicable) continue;
      ++res.reports_checked;
      if (!holds(r, cfg.slack_rel)) {
        fail("sample", i,
             r.name + " violated: lhs=" + detail::short_number(r.lhs) +
                 " rhs=" + detail::short_number(r.rhs) + " slack=" +
                 detail::short_number(r.slack) + " on " +
                 detail::describe_sample(s));
        break;
      }
      if (r.name == "pearson") {
        pearson_rhs = r.rhs;
        mu4 = r.lhs;
        pearson_ok = true;
      } else if (r.name == "mu4_refined") {
        refined_rhs = r.rhs;
        refined_ok = true;
      }
    }
    if (res.violation) break;

    // Pearson sandwich: mu_3^2/mu_2 + mu_2^2 <= mu_4 <= refined upper bound.
    if (pearson_ok && refined_ok) {
      ++res.sandwich_checked;
      const double tol =
          cfg.slack_rel * std::max({1.0, std::abs(pearson_rhs), std::abs(mu4),
                                    std::abs(refined_rhs)});
      if (!(pearson_rhs <= mu4 + tol && mu4 <= refined_rhs + tol)) {
        fail("sample", i, "Pearson sandwich violated on " +
                              detail::describe_sample(s));
        break;
      }
    }

    // Chain orderings: lhs <= sharper bound <= range-only bound.
    const MomentSet m = compute_moments(s, 4);
    const Interval iv = s.interval();
    const double w = iv.width();
    const BoundReport hankel = hankel_gap_upper(m, iv);
    const BoundReport pgap = pearson_gap_upper(m, iv);
    const double hankel_r2 = w * w * w * w * w * w / 432.0;
    const double pgap_r2 = w * w * w * w / 64.0;
    ++res.chains_checked;
    const double htol =
        cfg.slack_rel * std::max({1.0, std::abs(hankel.lhs), hankel_r2});
    if (!(hankel.lhs <= hankel.rhs + htol && hankel.rhs <= hankel_r2 + htol)) {
      fail("sample", i, "hankel_gap chain violated on " +
                            detail::describe_sample(s));
      break;
    }
    if (pgap.applicable) {
      const double ptol =
          cfg.slack_rel * std::max({1.0, std::abs(pgap.lhs), pgap_r2});
      if (!(pgap.lhs <= pgap.rhs + ptol && pgap.rhs <= pgap_r2 + ptol)) {
        fail("sample", i, "pearson_gap chain violated on " +
                              detail::describe_sample(s));
        break;
      }
    }
  }

  oracle::MatrixGenerator matrices(cfg.seed);
  for (int i = 0; i < cfg.matrices && !res.violation; ++i) {
    const SquareMatrix a = matrices.next();
    ++res.matrices_checked;
    const double spread = oracle::exact_spread(a);
    const BestBounds bb = best_bounds(a);
    for (const SpreadEstimate& e : bb.all) {
      ++res.estimates_checked;
      const bool ok = e.direction == Direction::Lower
                          ? e.value <= spread + cfg.spread_tol
                          : e.value >= spread - cfg.spread_tol;
      if (!ok) {
        fail("matrix", i,
             e.name + (e.functional ? " [" + e.functional->label() + "]" : "") +
                 " value=" + detail::short_number(e.value) +
                 " vs spread=" + detail::short_number(spread));
        break;
      }
    }
  }

  oracle::PolynomialGenerator polys(cfg.seed);
  for (int i = 0; i < cfg.polynomials && !res.violation; ++i) {
    const auto inst = polys.next();
    ++res.polynomials_checked;
    const double span = oracle::exact_span(inst.poly);
    const SpanReport rep = span_report(inst.poly, /*verify=*/false);
    const double tol = cfg.span_rel * std::max(1.0, span);
    for (const SpanBound& b : rep.bounds) {
      if (!b.applicable) continue;
      ++res.span_bounds_checked;
      const bool ok = b.direction == Direction::Lower ? b.value <= span + tol
                                                      : b.value >= span - tol;
      if (!ok) {
        fail("polynomial", i,
             b.name + " value=" + detail::short_number(b.value) +
                 " vs span=" + detail::short_number(span));
        break;
      }
    }
  }

  return res;
}

}  // namespace momentbounds
