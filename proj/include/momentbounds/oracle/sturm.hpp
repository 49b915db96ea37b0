#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "momentbounds/errors.hpp"
#include "momentbounds/polynomial.hpp"

namespace momentbounds::oracle {

/// Real roots of a polynomial, isolated by Sturm chains and refined by
/// bisection. Multiplicities come from the gcd square-free cascade.
struct RootSet {
  std::vector<double> roots;        ///< sorted ascending, one per distinct root
  std::vector<int> multiplicities;  ///< parallel to roots
  double bracket_width = 0.0;       ///< widest final bisection bracket

  /// Real-root count of the original polynomial, with multiplicity.
  int real_count() const {
    int c = 0;
    for (int m : multiplicities) c += m;
    return c;
  }

  /// Roots repeated by multiplicity, sorted.
  std::vector<double> expanded() const {
    std::vector<double> out;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      out.insert(out.end(), static_cast<std::size_t>(multiplicities[i]),
                 roots[i]);
    }
    return out;
  }
};

namespace detail {

// Dense polynomial helpers on descending coefficient vectors. The oracle
// keeps its own arithmetic; nothing here is shared with bound evaluation.

using Poly = std::vector<double>;

struct SturmInternal {
  std::string what;
};

inline double max_abs(const Poly& p) {
  double m = 0.0;
  for (double c : p) m = std::max(m, std::abs(c));
  return m;
}

/// Drops leading coefficients with |c| <= cut (absolute threshold).
inline Poly trimmed_abs(Poly p, double cut) {
  std::size_t lead = 0;
  while (lead < p.size() && std::abs(p[lead]) <= cut) ++lead;
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(lead));
  return p;
}

/// Drops leading coefficients below eps relative to the largest coefficient.
inline Poly trimmed(Poly p, double eps) {
  const double cut = eps * max_abs(p);
  return trimmed_abs(std::move(p), cut);
}

inline bool is_zero(const Poly& p) { return p.empty(); }

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly normalized(Poly p) {
  const double m = max_abs(p);
  if (m > 0.0) {
    for (double& c : p) c /= m;
  }
  return p;
}

inline Poly derivative(const Poly& p) {
  const int n = degree(p);
  if (n <= 0) return {};
  Poly d(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    d[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)] *
                                     static_cast<double>(n - i);
  }
  return d;
}

inline double eval(const Poly& p, double x) {
  double v = 0.0;
  for (double c : p) v = v * x + c;
  return v;
}

/// Magnitude of the evaluation at x (sum of term magnitudes), the natural
/// scale for "value is numerically zero" decisions.
inline double eval_scale(const Poly& p, double x) {
  double v = 0.0;
  for (double c : p) v = std::abs(v * x) + std::abs(c);
  return v;
}

/// Remainder of num / den. den must be trimmed (nonzero leading coefficient).
/// Residual coefficients are zeroed against the operand scale, not the
/// remainder's own scale, so cancellation noise collapses to the zero
/// polynomial instead of fabricating extra chain elements.
inline Poly remainder(Poly num, const Poly& den, double eps) {
  const double cut = eps * std::max(max_abs(num), max_abs(den));
  const int dd = degree(den);
  while (!num.empty() && degree(num) >= dd) {
    const double factor = num[0] / den[0];
    for (int k = 0; k <= dd; ++k) {
      num[static_cast<std::size_t>(k)] -= factor * den[static_cast<std::size_t>(k)];
    }
    num.erase(num.begin());
  }
  return trimmed_abs(std::move(num), cut);
}

/// Quotient of num / den, remainder returned through rem.
inline Poly quotient(Poly num, const Poly& den, double eps, Poly* rem) {
  const double cut = eps * std::max(max_abs(num), max_abs(den));
  const int dn = degree(num);
  const int dd = degree(den);
  if (dn < dd) {
    if (rem) *rem = std::move(num);
    return {};
  }
  Poly q(static_cast<std::size_t>(dn - dd) + 1, 0.0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double factor = num[i] / den[0];
    q[i] = factor;
    for (int k = 0; k <= dd; ++k) {
      num[i + static_cast<std::size_t>(k)] -=
          factor * den[static_cast<std::size_t>(k)];
    }
  }
  num.erase(num.begin(), num.begin() + static_cast<std::ptrdiff_t>(q.size()));
  if (rem) *rem = trimmed_abs(std::move(num), cut);
  return q;
}

/// Euclidean gcd with max-norm normalization each round; the eps threshold
/// decides when a remainder has collapsed to zero.
inline Poly gcd(Poly a, Poly b, double eps) {
  a = normalized(trimmed(std::move(a), eps));
  b = normalized(trimmed(std::move(b), eps));
  if (is_zero(b)) return a;
  while (degree(b) > 0) {
    Poly r = remainder(a, b, eps);
    if (is_zero(r)) return b;
    a = std::move(b);
    b = normalized(std::move(r));
  }
  return {1.0};  // coprime
}

inline std::vector<Poly> sturm_chain(const Poly& q, double eps) {
  std::vector<Poly> chain;
  chain.push_back(normalized(q));
  Poly d = normalized(derivative(q));
  if (is_zero(d)) return chain;
  chain.push_back(std::move(d));
  while (degree(chain.back()) > 0) {
    Poly r = remainder(chain[chain.size() - 2], chain.back(), eps);
    if (is_zero(r)) break;
    for (double& c : r) c = -c;
    chain.push_back(normalized(std::move(r)));
  }
  return chain;
}

inline int sign_changes(const std::vector<Poly>& chain, double x) {
  int changes = 0;
  int prev = 0;
  for (const Poly& p : chain) {
    const double v = eval(p, x);
    const int s = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

/// 1 + max |a_i| for a monic polynomial: every root lies strictly inside.
inline double cauchy_bound(const Poly& p) {
  double m = 0.0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    m = std::max(m, std::abs(p[i] / p[0]));
  }
  return 1.0 + m;
}

struct Isolator {
  const Poly& q;
  const Poly& dq;
  const std::vector<Poly>& chain;
  double width;  ///< relative bracket width target
  std::vector<double>* out;
  int depth = 0;

  int count(double a, double b) const {
    return sign_changes(chain, a) - sign_changes(chain, b);
  }

  /// Bracket width target local to the interval (1e-10 near the origin is a
  /// very different length than 1e-10 at a root of size 1e6).
  double target(double lo, double hi) const {
    return width * std::max({1.0, std::abs(lo), std::abs(hi)});
  }

  /// Newton steps from a bisection estimate; simple roots of the square-free
  /// part converge to machine precision in a few iterations.
  double polish(double x, double lo, double hi) const {
    const double slack = hi - lo;
    for (int it = 0; it < 8; ++it) {
      const double f = eval(q, x);
      if (f == 0.0) break;
      const double d = eval(dq, x);
      if (d == 0.0) break;
      const double step = f / d;
      const double nx = x - step;
      if (nx < lo - slack || nx > hi + slack) break;
      x = nx;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    return x;
  }

  /// Bisects (lo, hi], known to hold exactly one root, down to the local
  /// width target, then polishes.
  double refine(double lo, double hi) const {
    int vlo = sign_changes(chain, lo);
    while (hi - lo > target(lo, hi)) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;  // width below representable spacing
      if (eval(q, mid) == 0.0) return mid;
      const int vm = sign_changes(chain, mid);
      if (vlo - vm == 1) {
        hi = mid;
      } else {
        lo = mid;
        vlo = vm;
      }
    }
    return polish(0.5 * (lo + hi), lo, hi);
  }

  void isolate(double lo, double hi, int k) {
    if (k <= 0) return;
    if (++depth > 4000) throw SturmInternal{"isolation recursion too deep"};
    if (k == 1) {
      out->push_back(refine(lo, hi));
      return;
    }
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= target(lo, hi) || mid <= lo || mid >= hi) {
      // Cluster tighter than the requested resolution.
      out->insert(out->end(), static_cast<std::size_t>(k), mid);
      return;
    }
    if (eval(q, mid) == 0.0) {
      out->push_back(mid);
      const double nudge = 1e-14 * std::max(1.0, std::abs(mid));
      const int left = count(lo, mid - nudge);
      const int right = count(mid, hi);
      if (left + right != k - 1) {
        throw SturmInternal{"inconsistent split at an exact root hit"};
      }
      isolate(lo, mid - nudge, left);
      isolate(mid, hi, right);
      return;
    }
    const int left = count(lo, mid);
    if (left < 0 || left > k) throw SturmInternal{"inconsistent Sturm count"};
    isolate(lo, mid, left);
    isolate(mid, hi, k - left);
  }
};

/// Distinct real roots of a square-free polynomial.
inline std::vector<double> square_free_roots(const Poly& q, double width,
                                             double eps) {
  if (degree(q) < 1) return {};
  if (degree(q) == 1) return {-q[1] / q[0]};
  const auto chain = sturm_chain(q, eps);
  const Poly dq = derivative(q);
  const double bound = cauchy_bound(q) + 1.0;
  std::vector<double> roots;
  Isolator iso{q, dq, chain, width, &roots};
  const int total = iso.count(-bound, bound);
  if (total < 0 || total > degree(q)) {
    throw SturmInternal{"total root count out of range"};
  }
  iso.isolate(-bound, bound, total);
  std::sort(roots.begin(), roots.end());
  return roots;
}

struct MultiRoot {
  double x;
  int mult;
};

/// Square-free cascade: roots of p = roots of its square-free part, with
/// multiplicity 1 plus whatever gcd(p, p') still carries at the same point.
inline std::vector<MultiRoot> roots_with_multiplicity(const Poly& p,
                                                      double width,
                                                      double eps) {
  if (degree(p) < 1) return {};
  std::vector<MultiRoot> out;
  const Poly g = gcd(p, derivative(p), eps);
  if (degree(g) < 1) {
    for (double x : square_free_roots(p, width, eps)) out.push_back({x, 1});
    return out;
  }
  Poly rem;
  const Poly q = trimmed(quotient(p, g, eps, &rem), eps);
  if (max_abs(rem) > 1e-6 * std::max(1.0, max_abs(p))) {
    throw SturmInternal{"square-free division left a large remainder"};
  }
  const auto base = square_free_roots(q, width, eps);
  const auto inner = roots_with_multiplicity(g, width, eps);
  for (double x : base) {
    int mult = 1;
    for (const MultiRoot& r : inner) {
      if (std::abs(r.x - x) <= 1e-6 * std::max(1.0, std::abs(x))) {
        mult += r.mult;
      }
    }
    out.push_back({x, mult});
  }
  return out;
}

}  // namespace detail

/// Isolates every real root of p and bisects each to the relative bracket
/// width `width` (scaled by max(1, |root|); default 1e-10), then polishes
/// with Newton steps. Multiplicities are resolved through the gcd(p, p')
/// square-free cascade; a near-degenerate chain is retried once with a
/// coarser zero threshold before giving up.
inline RootSet sturm_real_roots(const Polynomial& p, double width = -1.0) {
  const auto& span = p.coefficients();
  detail::Poly coeffs(span.begin(), span.end());
  if (width <= 0.0) {
    width = 1e-10;
  }
  std::vector<detail::MultiRoot> found;
  try {
    found = detail::roots_with_multiplicity(coeffs, width, 1e-12);
  } catch (const detail::SturmInternal&) {
    try {
      found = detail::roots_with_multiplicity(coeffs, width, 1e-9);
    } catch (const detail::SturmInternal& inner) {
      throw ConvergenceError("Sturm isolation failed: " + inner.what);
    }
  }
  RootSet out;
  out.bracket_width = width;
  for (const auto& r : found) {
    out.roots.push_back(r.x);
    out.multiplicities.push_back(r.mult);
  }
  return out;
}

/// Span (largest minus smallest root) of a polynomial whose roots are all
/// real; anything else raises RealRootednessViolation.
inline double exact_span(const Polynomial& p) {
  const RootSet rs = sturm_real_roots(p);
  if (rs.real_count() != p.degree()) {
    throw RealRootednessViolation(
        "polynomial has " + std::to_string(rs.real_count()) + " real roots, " +
        "degree is " + std::to_string(p.degree()));
  }
  return rs.roots.back() - rs.roots.front();
}

}  // namespace momentbounds::oracle
