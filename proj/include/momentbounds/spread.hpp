#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "momentbounds/errors.hpp"
#include "momentbounds/matrix.hpp"
#include "momentbounds/oracle/jacobi.hpp"
#include "momentbounds/report.hpp"

namespace momentbounds {

/// One lower or upper estimate of the eigenvalue spread
/// spd(A) = max_{i,j} |lambda_i - lambda_j|.
struct SpreadEstimate {
  std::string name;
  double value = 0.0;
  Direction direction = Direction::Lower;
  std::optional<Functional> functional;
  std::optional<int> parameter;  ///< trace-power order r, when applicable
  std::string note;
};

namespace detail {

inline void require_hermitian(const SquareMatrix& a, const char* what) {
  if (!a.is_hermitian()) {
    throw NotApplicableError(std::string(what) + " requires a Hermitian matrix");
  }
}

inline double row_offdiag_norm2(const SquareMatrix& a, std::size_t i) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    if (k != i) s += std::norm(a.at(i, k));
  }
  return s;
}

/// phi(B^2..B^upto) with B = A - phi(A) I, sharing one power chain.
inline std::vector<double> centered_powers(const Functional& phi,
                                           const SquareMatrix& a, int upto) {
  const double center = apply_functional(phi, a).real();
  const SquareMatrix b = a.shifted(Complex{center, 0.0});
  std::vector<double> out(static_cast<std::size_t>(upto) + 1, 0.0);
  SquareMatrix p = b;
  for (int r = 2; r <= upto; ++r) {
    p = p * b;
    out[static_cast<std::size_t>(r)] = apply_functional(phi, p).real();
  }
  return out;
}

}  // namespace detail

/// spd(A)^2 >= max_{i != j} (a_ii - a_jj)^2 + 4 |a_ij|^2.
inline SpreadEstimate lower_mirsky_pairs(const SquareMatrix& a) {
  detail::require_hermitian(a, "pairwise spread bound");
  if (a.dim() < 2) {
    throw NotApplicableError("pairwise spread bound needs dim >= 2");
  }
  double best = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      const double d = (a.at(i, i) - a.at(j, j)).real();
      best = std::max(best, d * d + 4.0 * std::norm(a.at(i, j)));
    }
  }
  return {"mirsky", std::sqrt(best), Direction::Lower, {}, {}, {}};
}

/// spd(A)^2 >= max_{i != j} (a_ii - a_jj)^2 + 2 sum_{k != i} |a_ik|^2
///                                          + 2 sum_{k != j} |a_jk|^2.
inline SpreadEstimate lower_barnes_hoffman(const SquareMatrix& a) {
  detail::require_hermitian(a, "row-pair spread bound");
  if (a.dim() < 2) {
    throw NotApplicableError("row-pair spread bound needs dim >= 2");
  }
  double best = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double ri = detail::row_offdiag_norm2(a, i);
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      const double d = (a.at(i, i) - a.at(j, j)).real();
      best = std::max(best,
                      d * d + 2.0 * ri + 2.0 * detail::row_offdiag_norm2(a, j));
    }
  }
  return {"barnes_hoffman", std::sqrt(best), Direction::Lower, {}, {}, {}};
}

/// spd(A)^2 >= 4 max_j sum_{k != j} |a_jk|^2.
inline SpreadEstimate lower_offdiag(const SquareMatrix& a) {
  detail::require_hermitian(a, "off-diagonal spread bound");
  double best = 0.0;
  for (std::size_t j = 0; j < a.dim(); ++j) {
    best = std::max(best, detail::row_offdiag_norm2(a, j));
  }
  return {"row_offdiag", 2.0 * std::sqrt(best), Direction::Lower, {}, {}, {}};
}

/// spd(A) >= 2 sqrt(phi(B^2)) — the variance bound for any positive unital
/// linear functional phi.
inline SpreadEstimate lower_variance(const Functional& phi,
                                     const SquareMatrix& a) {
  const double p2 = centered_power(phi, a, 2);
  return {"variance", 2.0 * std::sqrt(std::max(p2, 0.0)), Direction::Lower,
          phi, {}, {}};
}

/// spd(A) >= (12 phi(B^4))^{1/4}.
inline SpreadEstimate lower_fourth(const Functional& phi,
                                   const SquareMatrix& a) {
  const double p4 = centered_power(phi, a, 4);
  return {"fourth_moment", std::pow(12.0 * std::max(p4, 0.0), 0.25),
          Direction::Lower, phi, {}, {}};
}

/// spd(A) >= (432 (phi(B^2) phi(B^4) - phi(B^2)^3 - phi(B^3)^2))^{1/6}.
/// The inner expression is a moment Hankel determinant, non-negative for a
/// real spectrum; roundoff negatives are clamped to zero with a note.
inline SpreadEstimate lower_sixth_det(const Functional& phi,
                                      const SquareMatrix& a) {
  detail::require_hermitian(a, "determinant spread bound");
  const auto p = detail::centered_powers(phi, a, 4);
  double inner = p[2] * p[4] - p[2] * p[2] * p[2] - p[3] * p[3];
  // Two-point spectra make the determinant exactly zero; the sixth root
  // would blow cancellation residue up to visible size, so zero anything
  // below roundoff relative to the constituent terms.
  const double term_scale = std::max(
      {std::abs(p[2] * p[4]), std::abs(p[2] * p[2] * p[2]), p[3] * p[3]});
  if (std::abs(inner) <= 1e-12 * term_scale) inner = 0.0;
  std::string note;
  if (inner < 0.0) {
    inner = 0.0;
    note = "inner determinant clamped to 0";
  }
  return {"hankel_det", std::pow(432.0 * inner, 1.0 / 6.0), Direction::Lower,
          phi, {}, std::move(note)};
}

/// spd(A)^{2r} <= 2^{2r-1} tr(B^{2r}) with B = A - (tr A / n) I, for matrices
/// with real eigenvalues (tr B^{2r} is then the 2r-th spread moment sum).
/// Hermitian matrices always qualify; for others the caller asserts the real
/// spectrum. A negative trace power (real spectrum impossible) clamps to 0.
inline SpreadEstimate upper_trace_power(const SquareMatrix& a, int r) {
  if (r < 1) throw Error("trace-power bound needs r >= 1");
  const Complex center = a.trace() / static_cast<double>(a.dim());
  const SquareMatrix b = a.shifted(center);
  double inner = b.power(2 * r).trace().real();
  std::string note;
  if (inner < 0.0) {
    inner = 0.0;
    note = "negative trace power clamped (spectrum not real?)";
  }
  const double scale = std::pow(2.0, 2 * r - 1);
  return {"trace_power", std::pow(scale * inner, 1.0 / (2.0 * r)),
          Direction::Upper, {}, r, std::move(note)};
}

/// 2x2 moment determinant bound for 0 <= A <= M I:
/// 0 <= phi(A) phi(A^3) - phi(A^2)^2 <= M^4 / 27.
/// The spectrum hypothesis is caller-asserted. With `verify_spectrum` set
/// (real symmetric input only) the eigenvalue oracle checks it and a
/// spectrum outside [0, M] raises PreconditionError.
inline BoundReport hankel_psd_bound(const Functional& phi,
                                    const SquareMatrix& a, double m_cap,
                                    bool verify_spectrum = false) {
  detail::require_hermitian(a, "PSD moment determinant");
  if (verify_spectrum) {
    if (!a.is_real(0.0)) {
      throw NotApplicableError("spectrum verification needs a real symmetric matrix");
    }
    const oracle::Spectrum s = oracle::jacobi_eigenvalues(a);
    const double tol = 1e-10 * std::max(1.0, std::abs(m_cap));
    if (s.eigenvalues.front() < -tol || s.eigenvalues.back() > m_cap + tol) {
      throw PreconditionError("spectrum not contained in [0, " +
                              std::to_string(m_cap) + "]");
    }
  }
  const double p1 = apply_functional(phi, a).real();
  const double p2 = apply_functional(phi, a.power(2)).real();
  const double p3 = apply_functional(phi, a.power(3)).real();
  const double lhs = p1 * p3 - p2 * p2;
  const double cap = m_cap * m_cap;
  return make_report("hankel_psd", Direction::Upper, lhs, cap * cap / 27.0,
                     "also bounded below by 0");
}

/// Best available bracket for the spread, with the full estimate list.
struct BestBounds {
  std::optional<SpreadEstimate> lower;  ///< absent for non-Hermitian input
  SpreadEstimate upper;
  std::vector<SpreadEstimate> all;
};

/// Evaluates every lower bound over the trace / diagonal / diagonal-pair
/// functional grid (Hermitian input only) and the trace-power upper bound for
/// r in {1, 2, 3}; returns the tightest of each with the full list.
inline BestBounds best_bounds(const SquareMatrix& a) {
  BestBounds out;
  const bool hermitian = a.is_hermitian();
  if (hermitian) {
    if (a.dim() >= 2) {
      out.all.push_back(lower_mirsky_pairs(a));
      out.all.push_back(lower_barnes_hoffman(a));
    }
    out.all.push_back(lower_offdiag(a));
    std::vector<Functional> grid;
    grid.push_back(Functional::trace());
    for (std::size_t i = 0; i < a.dim(); ++i) grid.push_back(Functional::diag(i));
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = i + 1; j < a.dim(); ++j) {
        grid.push_back(Functional::pair(i, j));
      }
    }
    for (const Functional& phi : grid) {
      out.all.push_back(lower_variance(phi, a));
      out.all.push_back(lower_fourth(phi, a));
      out.all.push_back(lower_sixth_det(phi, a));
    }
  }
  std::optional<SpreadEstimate> best_upper;
  for (int r : {1, 2, 3}) {
    SpreadEstimate e = upper_trace_power(a, r);
    if (!best_upper || e.value < best_upper->value) best_upper = e;
    out.all.push_back(std::move(e));
  }
  for (const SpreadEstimate& e : out.all) {
    if (e.direction == Direction::Lower &&
        (!out.lower || e.value > out.lower->value)) {
      out.lower = e;
    }
  }
  out.upper = *best_upper;
  return out;
}

}  // namespace momentbounds
