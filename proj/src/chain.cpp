#include "xysim/chain.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xysim {

namespace {

constexpr double kPi = std::numbers::pi;

Matrix coupling_term(int i, int n, double j) {
  // (J/2)(sx^i sx^{i+1} + sy^i sy^{i+1})
  return 0.5 * j *
         (embed(pauli_x(), i, n) * embed(pauli_x(), i + 1, n) +
          embed(pauli_y(), i, n) * embed(pauli_y(), i + 1, n));
}

Matrix local_rotation_all(Axis axis, double angle, int n) {
  Matrix u = identity(Eigen::Index(1) << n);
  for (int q = 1; q <= n; ++q) u = embed(rotation_matrix(axis, angle), q, n) * u;
  return u;
}

bool matches_basis(const Vector& state, std::string_view label) {
  return (state - basis_state(label)).cwiseAbs().maxCoeff() < 1e-12;
}

}  // namespace

ChainSpec ChainSpec::uniform(int n_qubits, double j) {
  ChainSpec spec;
  spec.n_qubits = n_qubits;
  spec.couplings.assign(static_cast<size_t>(n_qubits - 1), j);
  spec.validate();
  return spec;
}

bool ChainSpec::is_uniform() const {
  for (double j : couplings)
    if (j != couplings.front()) return false;
  return true;
}

void ChainSpec::validate() const {
  if (n_qubits < 2) throw std::invalid_argument("chain needs at least 2 spins");
  if (couplings.size() != static_cast<size_t>(n_qubits - 1))
    throw std::invalid_argument("chain needs n_qubits - 1 couplings");
}

Matrix xy_hamiltonian(const ChainSpec& spec) {
  spec.validate();
  const Eigen::Index dim = Eigen::Index(1) << spec.n_qubits;
  Matrix h = Matrix::Zero(dim, dim);
  for (int i = 1; i < spec.n_qubits; ++i)
    h += coupling_term(i, spec.n_qubits, spec.couplings[i - 1]);
  return h;
}

Matrix xy_unitary_closed_form(double phi) {
  const double c2 = std::cos(phi) * std::cos(phi);
  const double s2 = std::sin(phi) * std::sin(phi);
  const double c2p = std::cos(2 * phi);
  const Complex sp = Complex(0, 1) / std::sqrt(2.0) * std::sin(2 * phi);

  Matrix u = Matrix::Zero(8, 8);
  u(0, 0) = 1;
  u(1, 1) = c2;  u(1, 2) = -sp;  u(1, 4) = -s2;
  u(2, 1) = -sp; u(2, 2) = c2p;  u(2, 4) = -sp;
  u(3, 3) = c2;  u(3, 5) = -sp;  u(3, 6) = -s2;
  u(4, 1) = -s2; u(4, 2) = -sp;  u(4, 4) = c2;
  u(5, 3) = -sp; u(5, 5) = c2p;  u(5, 6) = -sp;
  u(6, 3) = -s2; u(6, 5) = -sp;  u(6, 6) = c2;
  u(7, 7) = 1;
  return u;
}

bool commuting_split_check(double phi, double tol) {
  const int n = 3;
  const Matrix a = embed(pauli_x(), 1, n) * embed(pauli_x(), 2, n) +
                   embed(pauli_y(), 2, n) * embed(pauli_y(), 3, n);
  const Matrix b = embed(pauli_y(), 1, n) * embed(pauli_y(), 2, n) +
                   embed(pauli_x(), 2, n) * embed(pauli_x(), 3, n);
  if ((a * b - b * a).cwiseAbs().maxCoeff() > tol) return false;

  // each factor generator squares to 2I, so the exponential collapses to
  // cos(phi) I - (i/sqrt 2) sin(phi) (generator)
  const double t = phi / std::sqrt(2.0);
  const Matrix product = expm_hermitian(a, t) * expm_hermitian(b, t);
  const Matrix direct =
      expm_hermitian(xy_hamiltonian(ChainSpec::uniform(3, 1.0)),
                     std::sqrt(2.0) * phi);
  if ((product - direct).cwiseAbs().maxCoeff() > tol) return false;
  return (product - xy_unitary_closed_form(phi)).cwiseAbs().maxCoeff() <= tol;
}

Vector evolve(const Vector& state, const ChainSpec& spec, double phi) {
  spec.validate();
  const Eigen::Index dim = Eigen::Index(1) << spec.n_qubits;
  if (state.size() != dim)
    throw std::invalid_argument("evolve: state dimension mismatch");
  if (spec.n_qubits == 3 && spec.is_uniform())
    return xy_unitary_closed_form(phi) * state;
  if (spec.couplings.front() == 0.0)
    throw std::invalid_argument(
        "evolve: phi is measured against the first coupling, which is zero");
  const double t = std::sqrt(2.0) * phi / spec.couplings.front();
  return expm_hermitian(xy_hamiltonian(spec), t) * state;
}

double bell_phi() { return kPi / 4; }
double w_phi() { return std::atan(std::sqrt(2.0)) / 2; }
double ghz_phi() { return kPi / 2; }

ProtocolResult prepare_bell(const Vector& initial) {
  if (!matches_basis(initial, "010") && !matches_basis(initial, "101"))
    throw std::invalid_argument("prepare_bell expects |010> or |101>");
  ProtocolResult result;
  result.phi_used = bell_phi();
  result.intermediate_state = xy_unitary_closed_form(result.phi_used) * initial;
  result.final_state = result.intermediate_state;
  return result;
}

ProtocolResult prepare_w(const Vector& initial) {
  if (!matches_basis(initial, "101"))
    throw std::invalid_argument("prepare_w expects |101>");
  ProtocolResult result;
  result.phi_used = w_phi();
  result.intermediate_state = xy_unitary_closed_form(result.phi_used) * initial;
  result.final_state =
      embed(rotation_matrix(Axis::Z, kPi / 2), 2, 3) * result.intermediate_state;
  return result;
}

ProtocolResult prepare_w() { return prepare_w(basis_state("101")); }

ProtocolResult prepare_ghz() {
  ProtocolResult result;
  result.phi_used = ghz_phi();
  const Vector superposition =
      local_rotation_all(Axis::Y, kPi / 2, 3) * basis_state("000");
  result.intermediate_state =
      xy_unitary_closed_form(result.phi_used) * superposition;
  result.final_state =
      local_rotation_all(Axis::X, kPi / 2, 3) * result.intermediate_state;
  return result;
}

Vector bell_target_010() {
  return Complex(0, -1) / std::sqrt(2.0) *
         (basis_state("001") + basis_state("100"));
}

Vector bell_target_101() {
  return Complex(0, -1) / std::sqrt(2.0) *
         (basis_state("011") + basis_state("110"));
}

Vector w_target() {
  return (basis_state("101") + basis_state("011") + basis_state("110")) /
         std::sqrt(3.0);
}

Vector ghz_target() {
  return (basis_state("000") + basis_state("111")) / std::sqrt(2.0);
}

}  // namespace xysim
