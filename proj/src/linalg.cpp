#include "xysim/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace xysim {

namespace {

Matrix make_pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix make_pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix make_pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace

Axis axis_from_name(std::string_view name) {
  if (name == "x" || name == "X") return Axis::X;
  if (name == "y" || name == "Y") return Axis::Y;
  if (name == "z" || name == "Z") return Axis::Z;
  throw std::invalid_argument("unknown rotation axis: " + std::string(name));
}

std::string_view axis_name(Axis axis) {
  switch (axis) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
  }
  throw std::logic_error("invalid axis");
}

const Matrix& pauli_x() {
  static const Matrix m = make_pauli_x();
  return m;
}

const Matrix& pauli_y() {
  static const Matrix m = make_pauli_y();
  return m;
}

const Matrix& pauli_z() {
  static const Matrix m = make_pauli_z();
  return m;
}

const Matrix& pauli(Axis axis) {
  switch (axis) {
    case Axis::X: return pauli_x();
    case Axis::Y: return pauli_y();
    case Axis::Z: return pauli_z();
  }
  throw std::logic_error("invalid axis");
}

Matrix sigma_plus() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1;
  return m;
}

Matrix sigma_minus() {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 0) = 1;
  return m;
}

Matrix identity(Eigen::Index dim) { return Matrix::Identity(dim, dim); }

Matrix rotation_matrix(Axis axis, double angle) {
  const double half = 0.5 * angle;
  return std::cos(half) * identity(2) -
         Complex(0, 1) * std::sin(half) * pauli(axis);
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m * m.adjoint() - identity(m.rows())).cwiseAbs().maxCoeff() <= tol;
}

bool is_psd(const Matrix& m, double tol) {
  if (!is_hermitian(m, tol)) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol;
}

void check_density_matrix(const Matrix& rho, double tol) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("density matrix must be square");
  if (!is_hermitian(rho, tol))
    throw std::invalid_argument("density matrix must be Hermitian");
  if (std::abs(rho.trace() - Complex(1.0)) > tol)
    throw std::invalid_argument("density matrix must have unit trace");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol)
    throw std::invalid_argument("density matrix must be positive semidefinite");
}

int num_qubits(Eigen::Index dim) {
  int n = 0;
  Eigen::Index d = dim;
  while (d > 1 && d % 2 == 0) {
    d /= 2;
    ++n;
  }
  if (d != 1 || n == 0)
    throw std::invalid_argument("dimension is not a power of two: " +
                                std::to_string(dim));
  return n;
}

int num_qubits(const Matrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("operator must be square");
  return num_qubits(m.rows());
}

int num_qubits(const Vector& v) { return num_qubits(v.size()); }

Matrix tensor(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

Matrix tensor(std::initializer_list<Matrix> factors) {
  Matrix out = identity(1);
  for (const Matrix& f : factors) out = tensor(out, f);
  return out;
}

Matrix embed(const Matrix& op, int qubit, int n_qubits) {
  if (op.rows() != 2 || op.cols() != 2)
    throw std::invalid_argument("embed expects a single-qubit operator");
  if (qubit < 1 || qubit > n_qubits)
    throw std::invalid_argument("qubit index out of range");
  const Eigen::Index left = Eigen::Index(1) << (qubit - 1);
  const Eigen::Index right = Eigen::Index(1) << (n_qubits - qubit);
  return tensor(tensor(identity(left), op), identity(right));
}

Vector basis_state(std::string_view label) {
  if (label.empty()) throw std::invalid_argument("empty basis label");
  int index = 0;
  for (char c : label) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("basis label must be a bit string: " +
                                  std::string(label));
    index = 2 * index + (c - '0');
  }
  return basis_state(index, static_cast<int>(label.size()));
}

Vector basis_state(int index, int n_qubits) {
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  if (index < 0 || index >= dim)
    throw std::invalid_argument("basis index out of range");
  Vector v = Vector::Zero(dim);
  v(index) = 1;
  return v;
}

Matrix projector(const Vector& psi) { return psi * psi.adjoint(); }

Matrix partial_trace(const Matrix& rho, const std::vector<int>& keep) {
  const int n = num_qubits(rho);
  if (keep.empty())
    throw std::invalid_argument("partial_trace: keep set must be nonempty");
  std::vector<bool> kept(n + 1, false);
  for (int q : keep) {
    if (q < 1 || q > n)
      throw std::invalid_argument("partial_trace: qubit index out of range");
    if (kept[q])
      throw std::invalid_argument("partial_trace: duplicate qubit index");
    kept[q] = true;
  }
  std::vector<int> keep_bits, trace_bits;  // bit position = n - qubit
  for (int q = 1; q <= n; ++q)
    (kept[q] ? keep_bits : trace_bits).push_back(n - q);

  const int nk = static_cast<int>(keep_bits.size());
  const int nt = static_cast<int>(trace_bits.size());
  const auto scatter = [](int value, const std::vector<int>& bits) {
    int out = 0;
    for (size_t i = 0; i < bits.size(); ++i)
      out |= ((value >> (bits.size() - 1 - i)) & 1) << bits[i];
    return out;
  };

  Matrix out = Matrix::Zero(Eigen::Index(1) << nk, Eigen::Index(1) << nk);
  for (int i = 0; i < (1 << nk); ++i) {
    const int fi = scatter(i, keep_bits);
    for (int j = 0; j < (1 << nk); ++j) {
      const int fj = scatter(j, keep_bits);
      Complex sum = 0;
      for (int t = 0; t < (1 << nt); ++t) {
        const int ft = scatter(t, trace_bits);
        sum += rho(fi | ft, fj | ft);
      }
      out(i, j) = sum;
    }
  }
  return out;
}

Matrix expm_hermitian(const Matrix& h, double t) {
  if (!is_hermitian(h, 1e-10))
    throw std::invalid_argument("expm_hermitian expects a Hermitian generator");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  const Eigen::VectorXd w = solver.eigenvalues();
  Vector phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i)
    phases(i) = std::exp(Complex(0, -w(i) * t));
  return solver.eigenvectors() * phases.asDiagonal() *
         solver.eigenvectors().adjoint();
}

PhaseReport equal_up_to_global_phase(const Matrix& u, const Matrix& v,
                                     double tol) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw std::invalid_argument("equal_up_to_global_phase: dimension mismatch");
  Eigen::Index r = 0, c = 0;
  v.cwiseAbs().maxCoeff(&r, &c);
  Complex phase(1.0, 0.0);
  if (std::abs(v(r, c)) > 0 && std::abs(u(r, c)) > 0)
    phase = (u(r, c) / v(r, c)) / std::abs(u(r, c) / v(r, c));
  PhaseReport report;
  report.phase = phase;
  report.max_residual = (u - phase * v).cwiseAbs().maxCoeff();
  report.equal = report.max_residual <= tol;
  return report;
}

double expectation(const Matrix& rho, const Matrix& obs) {
  if (!is_hermitian(obs, 1e-10))
    throw std::invalid_argument("expectation: observable must be Hermitian");
  if (rho.rows() != obs.rows() || rho.cols() != obs.cols())
    throw std::invalid_argument("expectation: dimension mismatch");
  const Complex value = (rho * obs).trace();
  if (std::abs(value.imag()) > 1e-10)
    throw std::runtime_error("expectation: imaginary residue above tolerance");
  return value.real();
}

}  // namespace xysim
