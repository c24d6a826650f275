// Seeded random-state generators and small comparison helpers shared by the
// test binaries. Everything here is independent of the code under test.
#pragma once

#include <cstdint>
#include <random>

#include "xysim/linalg.hpp"

namespace xysim::test {

inline std::mt19937_64 make_rng(std::uint64_t seed = 0x5eed) {
  return std::mt19937_64(seed);
}

inline Vector random_pure_state(std::mt19937_64& rng, int n_qubits) {
  std::normal_distribution<double> gauss;
  Vector v(Eigen::Index(1) << n_qubits);
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) = Complex(gauss(rng), gauss(rng));
  return v / v.norm();
}

inline Matrix random_matrix(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> gauss;
  Matrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c)
      m(r, c) = Complex(gauss(rng), gauss(rng));
  return m;
}

inline Matrix random_hermitian(std::mt19937_64& rng, Eigen::Index dim) {
  const Matrix m = random_matrix(rng, dim);
  return 0.5 * (m + m.adjoint());
}

inline Matrix random_unitary(std::mt19937_64& rng, Eigen::Index dim) {
  return expm_hermitian(random_hermitian(rng, dim), 1.0);
}

inline Matrix random_density(std::mt19937_64& rng, Eigen::Index dim) {
  const Matrix m = random_matrix(rng, dim);
  const Matrix rho = m * m.adjoint();
  return rho / rho.trace();
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const Vector& a, const Vector& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double overlap_modulus(const Vector& a, const Vector& b) {
  return std::abs(a.dot(b));
}

}  // namespace xysim::test
