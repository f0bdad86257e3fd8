#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "symdefect/numkit/linalg.hpp"

namespace symdefect::numkit {

[[nodiscard]] constexpr bool is_power_of_two(std::size_t n) noexcept {
  return n != 0 && (n & (n - 1)) == 0;
}

/// Precomputed twiddles and bit-reversal permutation for a radix-2
/// Cooley-Tukey transform of fixed power-of-two length. Immutable after
/// construction, so one plan may be shared between threads.
class FftPlan {
 public:
  explicit FftPlan(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }

  /// Unnormalized forward DFT, X_k = sum_j x_j exp(-2 pi i jk/n).
  void forward(std::span<Complex> data) const;
  /// Inverse DFT including the 1/n factor.
  void inverse(std::span<Complex> data) const;

 private:
  void transform(std::span<Complex> data, bool inverse) const;

  std::size_t n_;
  std::vector<Complex> twiddles_;  // exp(-2 pi i k / n), k < n/2
  std::vector<std::size_t> bitrev_;
};

[[nodiscard]] ComplexVector fft(const ComplexVector& v);
[[nodiscard]] ComplexVector ifft(const ComplexVector& v);

}  // namespace symdefect::numkit
