#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "momentbounds/errors.hpp"
#include "momentbounds/matrix.hpp"

namespace momentbounds::oracle {

/// Eigenvalues of a real symmetric matrix, from the cyclic Jacobi iteration.
struct Spectrum {
  std::vector<double> eigenvalues;  ///< sorted ascending
  int iterations = 0;               ///< sweeps performed
  double offdiag_residual = 0.0;    ///< Frobenius norm of the off-diagonal part
};

namespace detail {

inline double offdiag_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      s += 2.0 * a[i * n + j] * a[i * n + j];
    }
  }
  return std::sqrt(s);
}

}  // namespace detail

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// `tol` (default 1e-12 * max(1, max |entry|)), at most 100 sweeps.
inline Spectrum jacobi_eigenvalues(const SquareMatrix& m, double tol = -1.0) {
  const std::size_t n = m.dim();
  if (!m.is_real(0.0) || !m.is_hermitian()) {
    throw NotApplicableError("Jacobi eigensolver needs a real symmetric matrix");
  }
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j).real();
  }
  if (tol < 0.0) tol = 1e-12 * std::max(1.0, m.max_abs_entry());

  Spectrum out;
  constexpr int kMaxSweeps = 100;
  double off = detail::offdiag_norm(a, n);
  int sweep = 0;
  while (off > tol && sweep < kMaxSweeps) {
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
    }
    off = detail::offdiag_norm(a, n);
  }
  if (off > tol) {
    throw ConvergenceError("Jacobi iteration stalled, off-diagonal residual " +
                           std::to_string(off));
  }
  out.iterations = sweep;
  out.offdiag_residual = off;
  out.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = a[i * n + i];
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

/// Exact spread (largest minus smallest eigenvalue) of a real symmetric
/// matrix, from the Jacobi spectrum.
inline double exact_spread(const SquareMatrix& m) {
  const Spectrum s = jacobi_eigenvalues(m);
  return s.eigenvalues.back() - s.eigenvalues.front();
}

}  // namespace momentbounds::oracle
