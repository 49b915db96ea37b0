#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "momentbounds/errors.hpp"

namespace momentbounds {

using Complex = std::complex<double>;

/// Dense n x n complex matrix, row-major. Values are treated as immutable
/// once built; all operations return new matrices.
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t dim)
      : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {
    if (dim == 0) throw EmptyInputError("matrix dimension must be positive");
  }

  SquareMatrix(std::size_t dim, std::vector<Complex> entries)
      : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0) throw EmptyInputError("matrix dimension must be positive");
    if (entries_.size() != dim * dim) {
      throw Error("entry count does not match dimension");
    }
    for (const Complex& z : entries_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error("matrix entries must be finite");
      }
    }
  }

  static SquareMatrix identity(std::size_t dim) {
    SquareMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
  }

  static SquareMatrix from_real(std::size_t dim, const std::vector<double>& e) {
    std::vector<Complex> z(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) z[i] = Complex{e[i], 0.0};
    return SquareMatrix(dim, std::move(z));
  }

  std::size_t dim() const { return dim_; }

  const Complex& at(std::size_t i, std::size_t j) const {
    return entries_[i * dim_ + j];
  }
  Complex& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }

  Complex trace() const {
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
  }

  double max_abs_entry() const {
    double m = 0.0;
    for (const Complex& z : entries_) m = std::max(m, std::abs(z));
    return m;
  }

  bool is_hermitian(double tol = 1e-12) const {
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = i; j < dim_; ++j) {
        if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) return false;
      }
    }
    return true;
  }

  bool is_real(double tol = 0.0) const {
    for (const Complex& z : entries_) {
      if (std::abs(z.imag()) > tol) return false;
    }
    return true;
  }

  SquareMatrix conj_transpose() const {
    SquareMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        out.at(j, i) = std::conj(at(i, j));
      }
    }
    return out;
  }

  /// A - c I.
  SquareMatrix shifted(Complex c) const {
    SquareMatrix out = *this;
    for (std::size_t i = 0; i < dim_; ++i) out.at(i, i) -= c;
    return out;
  }

  SquareMatrix operator*(const SquareMatrix& rhs) const {
    if (rhs.dim_ != dim_) throw Error("matrix dimensions do not match");
    SquareMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t k = 0; k < dim_; ++k) {
        const Complex aik = at(i, k);
        if (aik == Complex{0.0, 0.0}) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
          out.at(i, j) += aik * rhs.at(k, j);
        }
      }
    }
    return out;
  }

  SquareMatrix power(int k) const {
    if (k < 1) throw Error("matrix power needs k >= 1");
    SquareMatrix out = *this;
    for (int i = 1; i < k; ++i) out = out * *this;
    return out;
  }

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// Positive unital linear functional on matrices: normalized trace, a single
/// diagonal entry, or the average of two diagonal entries. Indices are
/// zero-based.
class Functional {
 public:
  enum class Kind { Trace, Diag, Pair };

  static Functional trace() { return Functional(Kind::Trace, 0, 0); }
  static Functional diag(std::size_t i) { return Functional(Kind::Diag, i, i); }
  static Functional pair(std::size_t i, std::size_t j) {
    if (i == j) throw Error("pair functional needs distinct indices");
    return Functional(Kind::Pair, i, j);
  }

  Kind kind() const { return kind_; }
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }

  std::string label() const {
    switch (kind_) {
      case Kind::Trace:
        return "trace";
      case Kind::Diag:
        return "diag(" + std::to_string(i_) + ")";
      case Kind::Pair:
        return "pair(" + std::to_string(i_) + "," + std::to_string(j_) + ")";
    }
    return {};
  }

 private:
  Functional(Kind kind, std::size_t i, std::size_t j)
      : kind_(kind), i_(i), j_(j) {}

  Kind kind_;
  std::size_t i_;
  std::size_t j_;
};

inline Complex apply_functional(const Functional& phi, const SquareMatrix& a) {
  switch (phi.kind()) {
    case Functional::Kind::Trace:
      return a.trace() / static_cast<double>(a.dim());
    case Functional::Kind::Diag:
      if (phi.i() >= a.dim()) throw std::out_of_range("diag index out of range");
      return a.at(phi.i(), phi.i());
    case Functional::Kind::Pair:
      if (phi.i() >= a.dim() || phi.j() >= a.dim()) {
        throw std::out_of_range("pair index out of range");
      }
      return (a.at(phi.i(), phi.i()) + a.at(phi.j(), phi.j())) / 2.0;
  }
  throw Error("unreachable functional kind");
}

/// phi(B^r) with B = A - phi(A) I, by dense matrix products. Hermitian input
/// required: the centered moments feeding the spread bounds are only real
/// (and the bounds only valid) for real spectra.
inline double centered_power(const Functional& phi, const SquareMatrix& a,
                             int r) {
  if (!a.is_hermitian()) {
    throw NotApplicableError("centered_power requires a Hermitian matrix");
  }
  if (r < 1) throw Error("centered_power needs r >= 1");
  if (r == 1) return 0.0;
  const double center = apply_functional(phi, a).real();
  const SquareMatrix b = a.shifted(Complex{center, 0.0});
  return apply_functional(phi, b.power(r)).real();
}

}  // namespace momentbounds
