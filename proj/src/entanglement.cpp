#include "xysim/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "xysim/chain.hpp"

namespace xysim {

namespace {

Matrix sqrt_psd(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  Eigen::VectorXd w = solver.eigenvalues();
  for (Eigen::Index i = 0; i < w.size(); ++i)
    w(i) = std::sqrt(std::max(w(i), 0.0));
  return solver.eigenvectors() * w.asDiagonal() *
         solver.eigenvectors().adjoint();
}

double clamp_measure(double value) {
  if (value < -1e-6)
    throw std::logic_error("entanglement measure far below zero");
  return std::clamp(value, 0.0, 1.0);
}

// the two companions of a focus qubit among {1,2,3}
std::pair<int, int> other_two(int focus) {
  switch (focus) {
    case 1: return {2, 3};
    case 2: return {1, 3};
    case 3: return {1, 2};
  }
  throw std::invalid_argument("focus qubit must be 1, 2 or 3");
}

double residual_tangle(const Matrix& rho, int focus) {
  const auto [j, k] = other_two(focus);
  const double c_rest = one_tangle(rho, focus);
  const double c_ij = concurrence(partial_trace(rho, {focus, j}));
  const double c_ik = concurrence(partial_trace(rho, {focus, k}));
  return clamp_measure(c_rest * c_rest - c_ij * c_ij - c_ik * c_ik);
}

}  // namespace

Matrix spin_flip(const Matrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw std::invalid_argument("spin_flip expects a two-qubit matrix");
  const Matrix yy = tensor(pauli_y(), pauli_y());
  return yy * rho.conjugate() * yy;
}

double concurrence(const Matrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw std::invalid_argument("concurrence expects a two-qubit state");
  check_density_matrix(rho, 1e-8);
  const Matrix root = sqrt_psd(rho);
  const Matrix m = root * spin_flip(rho) * root;  // Hermitian PSD
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  Eigen::VectorXd w = solver.eigenvalues();  // ascending
  // eigenvalues are exact zeros up to solver noise for rank-deficient
  // products; clamp before the square root amplifies them to ~1e-8
  const double floor = std::max(w(3), 0.0) * 1e-13;
  std::array<double, 4> lambda{};
  for (int i = 0; i < 4; ++i)
    lambda[i] = w(3 - i) > floor ? std::sqrt(w(3 - i)) : 0.0;
  return std::max(lambda[0] - lambda[1] - lambda[2] - lambda[3], 0.0);
}

double one_tangle(const Matrix& rho_full, int qubit) {
  const Matrix marginal = partial_trace(rho_full, {qubit});
  const double purity = (marginal * marginal).trace().real();
  return std::sqrt(std::max(2.0 * (1.0 - purity), 0.0));
}

double three_tangle(const Vector& psi, int focus_qubit) {
  if (psi.size() != 8)
    throw std::invalid_argument("three_tangle expects a 3-qubit state");
  const double norm2 = psi.squaredNorm();
  if (std::abs(norm2 * norm2 - 1.0) > 1e-8)
    throw std::invalid_argument("three_tangle expects a normalized pure state");
  return residual_tangle(projector(psi), focus_qubit);
}

double three_tangle(const Matrix& rho, int focus_qubit) {
  if (rho.rows() != 8 || rho.cols() != 8)
    throw std::invalid_argument("three_tangle expects a 3-qubit state");
  const double purity = (rho * rho).trace().real();
  if (purity <= 1.0 - 1e-8)
    throw std::invalid_argument(
        "three_tangle is defined for pure states only");
  return residual_tangle(rho, focus_qubit);
}

EntanglementProfile entanglement_profile(const Vector& psi, double phi) {
  const Matrix rho = projector(psi);
  EntanglementProfile p;
  p.phi = phi;
  p.c12 = concurrence(partial_trace(rho, {1, 2}));
  p.c13 = concurrence(partial_trace(rho, {1, 3}));
  p.c23 = concurrence(partial_trace(rho, {2, 3}));
  p.c1_23 = one_tangle(rho, 1);
  p.c123 = three_tangle(psi);
  return p;
}

std::vector<EntanglementProfile> dynamics_sweep(
    const Vector& initial, const std::vector<double>& phi_grid) {
  if (initial.size() != 8)
    throw std::invalid_argument("dynamics_sweep expects a 3-qubit state");
  std::vector<EntanglementProfile> out;
  out.reserve(phi_grid.size());
  for (double phi : phi_grid)
    out.push_back(
        entanglement_profile(xy_unitary_closed_form(phi) * initial, phi));
  return out;
}

std::vector<double> default_phi_grid() {
  std::vector<double> grid;
  grid.reserve(629);
  for (int k = 0; k <= 628; ++k)
    grid.push_back(std::numbers::pi * k / 628.0);
  return grid;
}

}  // namespace xysim
