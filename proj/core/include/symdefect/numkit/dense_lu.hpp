#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "symdefect/errors.hpp"

namespace symdefect::numkit {

namespace detail {
inline double pivot_magnitude(double x) { return std::abs(x); }
inline double pivot_magnitude(std::complex<double> x) {
  return std::abs(x.real()) + std::abs(x.imag());
}
}  // namespace detail

/// LU factorization with partial pivoting of a dense row-major n x n matrix.
/// Used for the Pade solve (complex) and for real-linear Newton systems.
template <typename T>
class DenseLu {
 public:
  DenseLu(std::vector<T> a, std::size_t n) : n_(n), lu_(std::move(a)), perm_(n) {
    if (lu_.size() != n * n) throw DimensionError("DenseLu: storage is not n x n");
    for (std::size_t k = 0; k < n_; ++k) {
      std::size_t piv = k;
      double best = detail::pivot_magnitude(at(k, k));
      for (std::size_t i = k + 1; i < n_; ++i) {
        const double m = detail::pivot_magnitude(at(i, k));
        if (m > best) {
          best = m;
          piv = i;
        }
      }
      perm_[k] = piv;
      if (best == 0.0 || !std::isfinite(best)) {
        throw StepFailure("DenseLu: matrix is singular to working precision");
      }
      if (piv != k) {
        for (std::size_t j = 0; j < n_; ++j) std::swap(at(k, j), at(piv, j));
      }
      const T inv_pivot = T(1) / at(k, k);
      for (std::size_t i = k + 1; i < n_; ++i) {
        const T l = at(i, k) * inv_pivot;
        at(i, k) = l;
        if (l == T(0)) continue;
        T* row_i = &lu_[i * n_];
        const T* row_k = &lu_[k * n_];
        for (std::size_t j = k + 1; j < n_; ++j) row_i[j] -= l * row_k[j];
      }
    }
  }

  [[nodiscard]] std::size_t size() const noexcept { return n_; }

  /// Solves A X = B in place for a row-major n x nrhs block B.
  void solve_in_place(T* b, std::size_t nrhs) const {
    for (std::size_t k = 0; k < n_; ++k) {
      if (perm_[k] != k) {
        for (std::size_t j = 0; j < nrhs; ++j) std::swap(b[k * nrhs + j], b[perm_[k] * nrhs + j]);
      }
    }
    for (std::size_t i = 1; i < n_; ++i) {
      T* row_i = b + i * nrhs;
      for (std::size_t k = 0; k < i; ++k) {
        const T l = at(i, k);
        if (l == T(0)) continue;
        const T* row_k = b + k * nrhs;
        for (std::size_t j = 0; j < nrhs; ++j) row_i[j] -= l * row_k[j];
      }
    }
    for (std::size_t ii = n_; ii-- > 0;) {
      T* row_i = b + ii * nrhs;
      for (std::size_t k = ii + 1; k < n_; ++k) {
        const T u = at(ii, k);
        if (u == T(0)) continue;
        const T* row_k = b + k * nrhs;
        for (std::size_t j = 0; j < nrhs; ++j) row_i[j] -= u * row_k[j];
      }
      const T inv = T(1) / at(ii, ii);
      for (std::size_t j = 0; j < nrhs; ++j) row_i[j] *= inv;
    }
  }

  [[nodiscard]] std::vector<T> solve(std::vector<T> b) const {
    if (b.size() != n_) throw DimensionError("DenseLu::solve: rhs length mismatch");
    solve_in_place(b.data(), 1);
    return b;
  }

 private:
  T& at(std::size_t i, std::size_t j) { return lu_[i * n_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return lu_[i * n_ + j]; }

  std::size_t n_;
  std::vector<T> lu_;
  std::vector<std::size_t> perm_;
};

}  // namespace symdefect::numkit
