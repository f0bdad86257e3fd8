#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace symdefect::integrators {

/// Real-coefficient splitting tableau applied "A first":
///   S(t) = E_A(a_J t) E_B(b_{J-1} t) ... E_B(b_1 t) E_A(a_1 t),
/// so b_J must be zero (Strang is a = (1/2, 1/2), b = (1, 0)).
struct SplittingScheme {
  std::string name;
  std::vector<double> a;
  std::vector<double> b;
  int order = 0;

  [[nodiscard]] std::size_t stages() const noexcept { return a.size(); }
  /// Palindromic A-B-...-A composition.
  [[nodiscard]] bool palindromic(double tol = 1e-15) const;
  /// Throws std::invalid_argument unless consistent, J >= 2 and b_J == 0.
  void validate() const;
};

[[nodiscard]] SplittingScheme strang();
/// Fourth-order self-adjoint member of the embedded pair "Emb 4/3 AK s".
[[nodiscard]] SplittingScheme emb43_ak_s();

/// Commutator-free Magnus-type tableau:
///   S(t, t0) = exp(t B_J) ... exp(t B_1),  B_j = sum_k a_jk A(t0 + c_k t).
struct CfmScheme {
  std::string name;
  std::vector<double> nodes;    // c_k, k = 1..K
  std::vector<double> weights;  // a_jk, J x K row-major
  int order = 0;

  [[nodiscard]] std::size_t exponentials() const noexcept {
    return nodes.empty() ? 0 : weights.size() / nodes.size();
  }
  [[nodiscard]] std::size_t node_count() const noexcept { return nodes.size(); }
  [[nodiscard]] double weight(std::size_t j, std::size_t k) const {
    return weights[j * nodes.size() + k];
  }
  /// c_k - 1/2 == 1/2 - c_{K+1-k} and a_jk == a_{J+1-j, K+1-k}.
  [[nodiscard]] bool symmetric(double tol = 1e-15) const;
  /// sum_jk a_jk == 1.
  [[nodiscard]] bool consistent(double tol = 1e-15) const;
  void validate() const;
};

/// Fourth-order two-exponential scheme at the Gauss nodes (CF4:2).
[[nodiscard]] CfmScheme cf4();
/// J = K = 1, a = 1, c = 1/2: the exponential midpoint rule as a CFM scheme.
[[nodiscard]] CfmScheme exponential_midpoint_tableau();

}  // namespace symdefect::integrators
