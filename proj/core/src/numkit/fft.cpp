#include "symdefect/numkit/fft.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "symdefect/errors.hpp"

namespace symdefect::numkit {

namespace {

Complex mul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

}  // namespace

FftPlan::FftPlan(std::size_t n) : n_(n) {
  if (!is_power_of_two(n)) {
    throw DimensionError("FftPlan: length " + std::to_string(n) + " is not a power of two");
  }
  twiddles_.resize(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    twiddles_[k] = Complex(std::cos(angle), std::sin(angle));
  }
  // Quarter turn exactly.
  if (n >= 4) twiddles_[n / 4] = Complex(0.0, -1.0);

  bitrev_.resize(n);
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < bits; ++b)
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
    bitrev_[i] = r;
  }
}

void FftPlan::forward(std::span<Complex> data) const { transform(data, false); }

void FftPlan::inverse(std::span<Complex> data) const {
  transform(data, true);
  const double scale = 1.0 / static_cast<double>(n_);
  for (auto& z : data) z *= scale;
}

void FftPlan::transform(std::span<Complex> data, bool inverse) const {
  if (data.size() != n_) throw DimensionError("FftPlan: data length does not match plan");
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t j = bitrev_[i];
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n_ / len;
    for (std::size_t start = 0; start < n_; start += len) {
      for (std::size_t j = 0; j < half; ++j) {
        Complex w = twiddles_[j * stride];
        if (inverse) w = std::conj(w);
        const Complex t = mul(w, data[start + j + half]);
        data[start + j + half] = data[start + j] - t;
        data[start + j] += t;
      }
    }
  }
}

ComplexVector fft(const ComplexVector& v) {
  const FftPlan plan(v.size());
  ComplexVector out = v;
  plan.forward(out.span());
  return out;
}

ComplexVector ifft(const ComplexVector& v) {
  const FftPlan plan(v.size());
  ComplexVector out = v;
  plan.inverse(out.span());
  return out;
}

}  // namespace symdefect::numkit
