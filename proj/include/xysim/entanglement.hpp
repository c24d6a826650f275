// Entanglement measures for two- and three-qubit states: pairwise
// concurrence, one-vs-rest tangle, the residual three-qubit tangle, and the
// phi-sweep that tabulates all of them along an XY evolution.
#pragma once

#include <vector>

#include "xysim/linalg.hpp"

namespace xysim {

/// (sy (x) sy) conj(rho) (sy (x) sy) for a two-qubit density matrix.
Matrix spin_flip(const Matrix& rho);

/// Wootters concurrence of a two-qubit density matrix: max(l1-l2-l3-l4, 0)
/// with l_a the decreasing square roots of the eigenvalues of rho rho~.
/// Computed through the Hermitian product sqrt(rho) rho~ sqrt(rho), with
/// tiny negative eigenvalues clamped before the square root.
double concurrence(const Matrix& rho);

/// sqrt(2 (1 - Tr rho_i^2)) for qubit i (1-based) of a multi-qubit state.
double one_tangle(const Matrix& rho_full, int qubit);

/// Residual tangle of a pure 3-qubit state,
/// C_{i(jk)}^2 - C_{ij}^2 - C_{ik}^2, clamped to [0, 1].
double three_tangle(const Vector& psi, int focus_qubit = 1);

/// Density-matrix overload; throws on mixed input (purity below 1 - 1e-8).
double three_tangle(const Matrix& rho, int focus_qubit = 1);

struct EntanglementProfile {
  double phi = 0.0;
  double c12 = 0.0;
  double c13 = 0.0;
  double c23 = 0.0;
  double c1_23 = 0.0;
  double c123 = 0.0;
};

EntanglementProfile entanglement_profile(const Vector& psi, double phi = 0.0);

/// Evolves `initial` through the uniform 3-spin XY propagator at each grid
/// angle and records all five measures.
std::vector<EntanglementProfile> dynamics_sweep(
    const Vector& initial, const std::vector<double>& phi_grid);

/// 629 points covering [0, pi] in steps of pi/628.
std::vector<double> default_phi_grid();

}  // namespace xysim
