#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace symdefect::numkit {

using Complex = std::complex<double>;

/// Dense state vector over complex doubles.
class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t n, Complex value = {}) : data_(n, value) {}
  ComplexVector(std::initializer_list<Complex> values) : data_(values) {}
  explicit ComplexVector(std::vector<Complex> values) : data_(std::move(values)) {}

  [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }
  [[nodiscard]] bool empty() const noexcept { return data_.empty(); }

  Complex& operator[](std::size_t i) noexcept { return data_[i]; }
  const Complex& operator[](std::size_t i) const noexcept { return data_[i]; }

  Complex* data() noexcept { return data_.data(); }
  const Complex* data() const noexcept { return data_.data(); }
  auto begin() noexcept { return data_.begin(); }
  auto end() noexcept { return data_.end(); }
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }

  std::span<Complex> span() noexcept { return data_; }
  std::span<const Complex> span() const noexcept { return data_; }

  ComplexVector& operator+=(const ComplexVector& other);
  ComplexVector& operator-=(const ComplexVector& other);
  ComplexVector& operator*=(Complex s) noexcept;
  ComplexVector& operator*=(double s) noexcept;

  // this += s * x
  ComplexVector& axpy(Complex s, const ComplexVector& x);

  friend bool operator==(const ComplexVector&, const ComplexVector&) = default;

 private:
  std::vector<Complex> data_;
};

ComplexVector operator+(ComplexVector a, const ComplexVector& b);
ComplexVector operator-(ComplexVector a, const ComplexVector& b);
ComplexVector operator-(ComplexVector a);
ComplexVector operator*(Complex s, ComplexVector a);
ComplexVector operator*(double s, ComplexVector a);

[[nodiscard]] double norm2(const ComplexVector& v);
[[nodiscard]] double max_abs(const ComplexVector& v);
/// Hermitian inner product, conjugate-linear in the first argument.
[[nodiscard]] Complex dot(const ComplexVector& a, const ComplexVector& b);
[[nodiscard]] bool all_finite(const ComplexVector& v);

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols, Complex value = {})
      : rows_(rows), cols_(cols), data_(rows * cols, value) {}
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const ComplexVector& d);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) noexcept {
    return data_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }

  Complex* data() noexcept { return data_.data(); }
  const Complex* data() const noexcept { return data_.data(); }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s) noexcept;
  ComplexMatrix& operator*=(double s) noexcept;
  // this += s * x
  ComplexMatrix& axpy(Complex s, const ComplexMatrix& x);

  [[nodiscard]] ComplexMatrix adjoint() const;
  [[nodiscard]] double frobenius_norm() const;
  /// Maximum absolute column sum.
  [[nodiscard]] double one_norm() const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(double s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x);

/// AB - BA.
[[nodiscard]] ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// ad_B^m(X): X for m = 0, otherwise [B, ad_B^{m-1}(X)].
[[nodiscard]] ComplexMatrix ad_power(const ComplexMatrix& b, const ComplexMatrix& x,
                                     unsigned m);

[[nodiscard]] ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// n x n matrix with constant sub-, main and super-diagonal.
[[nodiscard]] ComplexMatrix tridiagonal(std::size_t n, Complex lower, Complex diag,
                                        Complex upper);

/// Pauli matrices.
[[nodiscard]] ComplexMatrix pauli_x();
[[nodiscard]] ComplexMatrix pauli_y();
[[nodiscard]] ComplexMatrix pauli_z();

}  // namespace symdefect::numkit
