#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "momentbounds/errors.hpp"

namespace momentbounds {

/// Monic real-coefficient polynomial, coefficients in descending powers
/// (coefficients()[0] == 1). A non-unit leading coefficient is normalized
/// away at construction.
class Polynomial {
 public:
  explicit Polynomial(std::vector<double> coeffs_desc)
      : coeffs_(std::move(coeffs_desc)) {
    if (coeffs_.size() < 2) {
      throw DegreeError("polynomial must have degree >= 1");
    }
    for (double c : coeffs_) {
      if (!std::isfinite(c)) throw Error("coefficients must be finite");
    }
    if (coeffs_[0] == 0.0) {
      throw Error("leading coefficient must be nonzero");
    }
    if (coeffs_[0] != 1.0) {
      const double lead = coeffs_[0];
      for (double& c : coeffs_) c /= lead;
      coeffs_[0] = 1.0;
    }
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  std::span<const double> coefficients() const { return coeffs_; }

  /// Coefficient a_k of x^{n-k} (a_0 = 1). Orders beyond the degree read as
  /// zero, which keeps the power-sum identities valid for low degrees.
  double a(int k) const {
    if (k < 0) throw Error("coefficient index must be non-negative");
    if (k > degree()) return 0.0;
    return coeffs_[static_cast<std::size_t>(k)];
  }

  double operator()(double x) const {
    double v = 0.0;
    for (double c : coeffs_) v = v * x + c;
    return v;
  }

 private:
  std::vector<double> coeffs_;
};

/// Shifts p so the x^{n-1} coefficient vanishes: returns (q, t) with
/// q(y) = p(y + t) and t = -a_1 / n. The roots of q are the roots of p
/// shifted by -t, so the span is unchanged and q's roots have zero mean.
inline std::pair<Polynomial, double> depress(const Polynomial& p) {
  const int n = p.degree();
  if (n < 2) throw DegreeError("depressing needs degree >= 2");
  const double t = -p.a(1) / static_cast<double>(n);

  // Ruffini-Horner Taylor shift: repeated synthetic division by (x - t).
  std::vector<double> c(p.coefficients().begin(), p.coefficients().end());
  for (int i = n; i >= 1; --i) {
    for (int j = 1; j <= i; ++j) {
      c[static_cast<std::size_t>(j)] += t * c[static_cast<std::size_t>(j - 1)];
    }
  }

  double scale = 0.0;
  for (double v : c) scale = std::max(scale, std::abs(v));
  if (std::abs(c[1]) > 1e-9 * std::max(1.0, scale)) {
    throw Error("depressed coefficient did not cancel (ill-conditioned shift)");
  }
  c[1] = 0.0;
  return {Polynomial(std::move(c)), t};
}

/// Power sums alpha_k = sum x_i^k of the roots of a depressed polynomial and
/// the matching sample moments m_k = alpha_k / n, read off the coefficients
/// through Newton's identities:
///   m_2 = -2 a_2 / n,  m_3 = -3 a_3 / n,  m_4 = (2/n)(a_2^2 - 2 a_4).
struct PowerSums {
  std::array<double, 5> alpha{};  ///< alpha[k] for k = 0..4 (alpha[0] = n)
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
  int n = 0;
  double a2 = 0.0;
  double a3 = 0.0;
  double a4 = 0.0;
};

inline PowerSums power_sums(const Polynomial& p) {
  const int n = p.degree();
  double scale = 0.0;
  for (double c : p.coefficients()) scale = std::max(scale, std::abs(c));
  if (std::abs(p.a(1)) > 1e-10 * std::max(1.0, scale)) {
    throw NotDepressedError("power sums need a depressed polynomial (a_1 = 0)");
  }
  PowerSums ps;
  ps.n = n;
  ps.a2 = p.a(2);
  ps.a3 = p.a(3);
  ps.a4 = p.a(4);
  const double dn = static_cast<double>(n);
  ps.m2 = -2.0 * ps.a2 / dn;
  ps.m3 = -3.0 * ps.a3 / dn;
  ps.m4 = 2.0 / dn * (ps.a2 * ps.a2 - 2.0 * ps.a4);
  ps.alpha = {dn, 0.0, dn * ps.m2, dn * ps.m3, dn * ps.m4};
  return ps;
}

}  // namespace momentbounds
