#include "symdefect/integrators/schemes.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace symdefect::integrators {

bool SplittingScheme::palindromic(double tol) const {
  const std::size_t j = a.size();
  if (b.size() != j || j == 0) return false;
  for (std::size_t i = 0; i < j; ++i)
    if (std::abs(a[i] - a[j - 1 - i]) > tol) return false;
  // b_1 .. b_{J-1} mirror each other; b_J is the empty trailing stage.
  for (std::size_t i = 0; i + 1 < j; ++i)
    if (std::abs(b[i] - b[j - 2 - i]) > tol) return false;
  return true;
}

void SplittingScheme::validate() const {
  if (a.size() != b.size()) throw std::invalid_argument(name + ": a and b differ in length");
  if (a.size() < 2) throw std::invalid_argument(name + ": need at least two A-stages");
  if (b.back() != 0.0) throw std::invalid_argument(name + ": trailing b coefficient must be 0");
  const double sa = std::accumulate(a.begin(), a.end(), 0.0);
  const double sb = std::accumulate(b.begin(), b.end(), 0.0);
  if (std::abs(sa - 1.0) > 1e-15 || std::abs(sb - 1.0) > 1e-15) {
    throw std::invalid_argument(name + ": coefficients are not consistent");
  }
}

SplittingScheme strang() { return {"strang", {0.5, 0.5}, {1.0, 0.0}, 2}; }

SplittingScheme emb43_ak_s() {
  return {"emb43aks",
          {0.267171359000977615, -0.033827909669505667, 0.533313101337056104,
           -0.033827909669505667, 0.267171359000977615},
          {-0.361837907604416033, 0.861837907604416033, 0.861837907604416033,
           -0.361837907604416033, 0.0},
          4};
}

bool CfmScheme::symmetric(double tol) const {
  const std::size_t k = nodes.size();
  const std::size_t j = exponentials();
  for (std::size_t i = 0; i < k; ++i)
    if (std::abs((nodes[i] - 0.5) - (0.5 - nodes[k - 1 - i])) > tol) return false;
  for (std::size_t r = 0; r < j; ++r)
    for (std::size_t c = 0; c < k; ++c)
      if (std::abs(weight(r, c) - weight(j - 1 - r, k - 1 - c)) > tol) return false;
  return true;
}

bool CfmScheme::consistent(double tol) const {
  const double s = std::accumulate(weights.begin(), weights.end(), 0.0);
  return std::abs(s - 1.0) <= tol;
}

void CfmScheme::validate() const {
  if (nodes.empty() || weights.empty() || weights.size() % nodes.size() != 0) {
    throw std::invalid_argument(name + ": weights must form a J x K array");
  }
  if (!consistent()) throw std::invalid_argument(name + ": weights do not sum to 1");
}

CfmScheme cf4() {
  const double r = std::sqrt(3.0);
  const double c1 = 0.5 - r / 6.0;
  const double c2 = 0.5 + r / 6.0;
  const double big = 0.25 + r / 6.0;
  const double small = 0.25 - r / 6.0;
  return {"cf4", {c1, c2}, {big, small, small, big}, 4};
}

CfmScheme exponential_midpoint_tableau() { return {"expmid", {0.5}, {1.0}, 2}; }

}  // namespace symdefect::integrators
