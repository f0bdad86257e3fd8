#include "symdefect/numkit/expm.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "symdefect/errors.hpp"
#include "symdefect/numkit/dense_lu.hpp"

namespace symdefect::numkit {

namespace {

// Backward-error thresholds for the [m/m] approximants, m = 3, 5, 7, 9, 13.
constexpr std::array<double, 4> kTheta = {1.495585217958292e-2, 2.539398330063230e-1,
                                          9.504178996162932e-1, 2.097847961257068e0};
constexpr double kTheta13 = 5.371920351148152e0;

constexpr std::array<double, 4> kPade3 = {120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kPade5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr std::array<double, 8> kPade7 = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                          25200.0,    1512.0,    56.0,      1.0};
constexpr std::array<double, 10> kPade9 = {17643225600.0, 8821612800.0, 2075673600.0,
                                           302702400.0,   30270240.0,   2162160.0,
                                           110880.0,      3960.0,       90.0,
                                           1.0};
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

// Low-degree approximants: U = A * sum_odd, V = sum_even, using powers A^2k.
template <std::size_t N>
void pade_low(const ComplexMatrix& a, const std::array<double, N>& b, ComplexMatrix& u,
              ComplexMatrix& v) {
  const std::size_t n = a.rows();
  const ComplexMatrix ident = ComplexMatrix::identity(n);
  const ComplexMatrix a2 = a * a;
  ComplexMatrix power = ident;  // A^{2k}
  ComplexMatrix odd(n, n);
  v = ComplexMatrix(n, n);
  for (std::size_t k = 0; 2 * k < N; ++k) {
    if (k > 0) power = power * a2;
    v.axpy(b[2 * k], power);
    if (2 * k + 1 < N) odd.axpy(b[2 * k + 1], power);
  }
  u = a * odd;
}

void pade13(const ComplexMatrix& a, ComplexMatrix& u, ComplexMatrix& v) {
  const auto& b = kPade13;
  const std::size_t n = a.rows();
  const ComplexMatrix ident = ComplexMatrix::identity(n);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;

  ComplexMatrix inner_u = b[13] * a6;
  inner_u.axpy(b[11], a4).axpy(b[9], a2);
  ComplexMatrix outer_u = a6 * inner_u;
  outer_u.axpy(b[7], a6).axpy(b[5], a4).axpy(b[3], a2).axpy(b[1], ident);
  u = a * outer_u;

  ComplexMatrix inner_v = b[12] * a6;
  inner_v.axpy(b[10], a4).axpy(b[8], a2);
  v = a6 * inner_v;
  v.axpy(b[6], a6).axpy(b[4], a4).axpy(b[2], a2).axpy(b[0], ident);
}

// (V - U)^{-1} (V + U)
ComplexMatrix pade_quotient(const ComplexMatrix& u, const ComplexMatrix& v) {
  const std::size_t n = u.rows();
  ComplexMatrix p = v + u;
  const ComplexMatrix q = v - u;
  std::vector<Complex> q_storage(q.data(), q.data() + n * n);
  const DenseLu<Complex> lu(std::move(q_storage), n);
  lu.solve_in_place(p.data(), n);
  return p;
}

}  // namespace

ComplexMatrix expm(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("expm: matrix must be square");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  const double norm = m.one_norm();
  if (!std::isfinite(norm)) throw std::domain_error("expm: non-finite entries");
  if (norm == 0.0) return ComplexMatrix::identity(n);

  ComplexMatrix u;
  ComplexMatrix v;
  if (norm <= kTheta[0]) {
    pade_low(m, kPade3, u, v);
    return pade_quotient(u, v);
  }
  if (norm <= kTheta[1]) {
    pade_low(m, kPade5, u, v);
    return pade_quotient(u, v);
  }
  if (norm <= kTheta[2]) {
    pade_low(m, kPade7, u, v);
    return pade_quotient(u, v);
  }
  if (norm <= kTheta[3]) {
    pade_low(m, kPade9, u, v);
    return pade_quotient(u, v);
  }

  int squarings = 0;
  if (norm > kTheta13) squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
  const ComplexMatrix scaled = std::ldexp(1.0, -squarings) * m;
  pade13(scaled, u, v);
  ComplexMatrix r = pade_quotient(u, v);
  for (int k = 0; k < squarings; ++k) r = r * r;
  return r;
}

ComplexVector expm_apply(const ComplexMatrix& m, const ComplexVector& v) {
  if (!m.is_square() || m.rows() != v.size()) {
    throw DimensionError("expm_apply: dimension mismatch");
  }
  return expm(m) * v;
}

}  // namespace symdefect::numkit
