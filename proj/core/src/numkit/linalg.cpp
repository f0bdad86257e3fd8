#include "symdefect/numkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symdefect/errors.hpp"

namespace symdefect::numkit {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": length mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shape mismatch");
  }
}

void require_square_pair(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw DimensionError(std::string(what) + ": operands must be square of equal size");
  }
}

}  // namespace

ComplexVector& ComplexVector::operator+=(const ComplexVector& other) {
  require_same_length(size(), other.size(), "ComplexVector::operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexVector& ComplexVector::operator-=(const ComplexVector& other) {
  require_same_length(size(), other.size(), "ComplexVector::operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexVector& ComplexVector::operator*=(Complex s) noexcept {
  for (auto& x : data_) x *= s;
  return *this;
}

ComplexVector& ComplexVector::operator*=(double s) noexcept {
  for (auto& x : data_) x *= s;
  return *this;
}

ComplexVector& ComplexVector::axpy(Complex s, const ComplexVector& x) {
  require_same_length(size(), x.size(), "ComplexVector::axpy");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += s * x.data_[i];
  return *this;
}

ComplexVector operator+(ComplexVector a, const ComplexVector& b) { return a += b; }
ComplexVector operator-(ComplexVector a, const ComplexVector& b) { return a -= b; }
ComplexVector operator-(ComplexVector a) { return a *= -1.0; }
ComplexVector operator*(Complex s, ComplexVector a) { return a *= s; }
ComplexVector operator*(double s, ComplexVector a) { return a *= s; }

double norm2(const ComplexVector& v) {
  // Scaled accumulation so tiny and huge entries neither underflow nor overflow.
  double scale = 0.0;
  double ssq = 1.0;
  auto accumulate = [&](double x) {
    if (x == 0.0) return;
    const double ax = std::abs(x);
    if (scale < ax) {
      ssq = 1.0 + ssq * (scale / ax) * (scale / ax);
      scale = ax;
    } else {
      ssq += (ax / scale) * (ax / scale);
    }
  };
  for (const auto& z : v) {
    accumulate(z.real());
    accumulate(z.imag());
  }
  return scale * std::sqrt(ssq);
}

double max_abs(const ComplexVector& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

Complex dot(const ComplexVector& a, const ComplexVector& b) {
  require_same_length(a.size(), b.size(), "dot");
  Complex s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

bool all_finite(const ComplexVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ComplexMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const ComplexVector& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "ComplexMatrix::operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "ComplexMatrix::operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) noexcept {
  for (auto& x : data_) x *= s;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double s) noexcept {
  for (auto& x : data_) x *= s;
  return *this;
}

ComplexMatrix& ComplexMatrix::axpy(Complex s, const ComplexMatrix& x) {
  require_same_shape(*this, x, "ComplexMatrix::axpy");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += s * x.data_[i];
  return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::one_norm() const {
  std::vector<double> col(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) col[j] += std::abs((*this)(i, j));
  return col.empty() ? 0.0 : *std::max_element(col.begin(), col.end());
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimension mismatch");
  const std::size_t n = a.rows();
  const std::size_t inner = a.cols();
  const std::size_t m = b.cols();
  ComplexMatrix c(n, m);
  // Interleaved (re, im) doubles; the explicit real arithmetic keeps the
  // inner loop free of the NaN-recovery path of std::complex multiplication.
  const double* pa = reinterpret_cast<const double*>(a.data());
  const double* pb = reinterpret_cast<const double*>(b.data());
  double* pc = reinterpret_cast<double*>(c.data());
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = pc + 2 * i * m;
    for (std::size_t k = 0; k < inner; ++k) {
      const double ar = pa[2 * (i * inner + k)];
      const double ai = pa[2 * (i * inner + k) + 1];
      if (ar == 0.0 && ai == 0.0) continue;
      const double* brow = pb + 2 * k * m;
      for (std::size_t j = 0; j < m; ++j) {
        const double br = brow[2 * j];
        const double bi = brow[2 * j + 1];
        crow[2 * j] += ar * br - ai * bi;
        crow[2 * j + 1] += ar * bi + ai * br;
      }
    }
  }
  return c;
}

ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector product: dimension mismatch");
  ComplexVector y(a.rows());
  const double* pa = reinterpret_cast<const double*>(a.data());
  const double* px = reinterpret_cast<const double*>(x.data());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double* row = pa + 2 * i * a.cols();
    double sr = 0.0;
    double si = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double ar = row[2 * j];
      const double ai = row[2 * j + 1];
      const double xr = px[2 * j];
      const double xi = px[2 * j + 1];
      sr += ar * xr - ai * xi;
      si += ar * xi + ai * xr;
    }
    y[i] = Complex(sr, si);
  }
  return y;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square_pair(a, b, "commutator");
  return a * b - b * a;
}

ComplexMatrix ad_power(const ComplexMatrix& b, const ComplexMatrix& x, unsigned m) {
  require_square_pair(b, x, "ad_power");
  ComplexMatrix result = x;
  for (unsigned k = 0; k < m; ++k) result = commutator(b, result);
  return result;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return k;
}

ComplexMatrix tridiagonal(std::size_t n, Complex lower, Complex diag, Complex upper) {
  ComplexMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    t(i, i) = diag;
    if (i + 1 < n) {
      t(i + 1, i) = lower;
      t(i, i + 1) = upper;
    }
  }
  return t;
}

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix pauli_y() { return {{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}}; }
ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

}  // namespace symdefect::numkit
