// Dense complex linear algebra for small spin systems: Pauli operators,
// tensor products, partial trace, Hermitian matrix exponential, and
// phase-insensitive operator comparison. Qubit 1 is the most significant
// bit everywhere, so |abc> maps to index 4a + 2b + c.
#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace xysim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kDefaultTol = 1e-10;

enum class Axis { X, Y, Z };

Axis axis_from_name(std::string_view name);
std::string_view axis_name(Axis axis);

// 2x2 building blocks
const Matrix& pauli_x();
const Matrix& pauli_y();
const Matrix& pauli_z();
const Matrix& pauli(Axis axis);
Matrix sigma_plus();
Matrix sigma_minus();
Matrix identity(Eigen::Index dim);

/// exp(-i angle sigma_axis / 2)
Matrix rotation_matrix(Axis axis, double angle);

bool is_hermitian(const Matrix& m, double tol = kDefaultTol);
bool is_unitary(const Matrix& m, double tol = kDefaultTol);
bool is_psd(const Matrix& m, double tol = kDefaultTol);

/// Throws std::invalid_argument unless rho is Hermitian, unit-trace and PSD
/// within tol.
void check_density_matrix(const Matrix& rho, double tol = kDefaultTol);

/// Number of qubits for a 2^n-dimensional operator or state; throws if the
/// dimension is not a power of two.
int num_qubits(Eigen::Index dim);
int num_qubits(const Matrix& m);
int num_qubits(const Vector& v);

/// Kronecker product, a on the more significant qubits.
Matrix tensor(const Matrix& a, const Matrix& b);
Matrix tensor(std::initializer_list<Matrix> factors);

/// Places a single-qubit operator on `qubit` (1-based) of an n-qubit system,
/// identities elsewhere.
Matrix embed(const Matrix& op, int qubit, int n_qubits);

/// Computational basis state from a bit-string label such as "010".
Vector basis_state(std::string_view label);
Vector basis_state(int index, int n_qubits);

Matrix projector(const Vector& psi);

/// Reduced density matrix on the kept qubits (1-based indices, order
/// preserved). Throws on an empty or out-of-range keep set.
Matrix partial_trace(const Matrix& rho, const std::vector<int>& keep);

/// exp(-i h t) through the spectral decomposition of the Hermitian h.
Matrix expm_hermitian(const Matrix& h, double t = 1.0);

struct PhaseReport {
  bool equal = false;
  Complex phase{1.0, 0.0};  // c with u ~ c v
  double max_residual = 0.0;
};

/// True iff u = c v entrywise for some unit complex c, within tol; c is read
/// off the largest-magnitude entry of v.
PhaseReport equal_up_to_global_phase(const Matrix& u, const Matrix& v,
                                     double tol = kDefaultTol);

/// Tr(rho obs) for a Hermitian observable; throws if the imaginary residue
/// exceeds 1e-10.
double expectation(const Matrix& rho, const Matrix& obs);

}  // namespace xysim
