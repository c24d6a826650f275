#include "xysim/nmr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "xysim/chain.hpp"

namespace xysim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr char kPauliLetters[] = {'I', 'X', 'Y', 'Z'};

const Matrix& pauli_by_letter(char letter) {
  static const Matrix eye = identity(2);
  switch (letter) {
    case 'I': return eye;
    case 'X': return pauli_x();
    case 'Y': return pauli_y();
    case 'Z': return pauli_z();
  }
  throw std::invalid_argument("unknown Pauli letter");
}

Matrix pauli_string(const std::string& label) {
  Matrix out = identity(1);
  for (char c : label) out = tensor(out, pauli_by_letter(c));
  return out;
}

Matrix pulse_unitary(const Pulse& pulse, int n) {
  return embed(rotation_matrix(pulse.axis, pulse.angle), pulse.qubit, n);
}

}  // namespace

Matrix equilibrium_deviation(const SpinSystem& system) {
  const int n = system.n_qubits();
  const Eigen::Index dim = Eigen::Index(1) << n;
  Matrix dev = Matrix::Zero(dim, dim);
  for (int q = 1; q <= n; ++q)
    dev += (system.gamma_ratios[q - 1] / system.gamma_ratios[0]) *
           embed(pauli_z(), q, n);
  return dev;
}

PseudoPureState make_pps(std::string_view label, double epsilon) {
  if (epsilon < 0.0 || epsilon > 1.0)
    throw std::invalid_argument("pps epsilon must lie in [0, 1]");
  const Vector ket = basis_state(label);
  const Eigen::Index dim = ket.size();
  PseudoPureState pps;
  pps.label = std::string(label);
  pps.epsilon = epsilon;
  pps.matrix = (1.0 - epsilon) / static_cast<double>(dim) * identity(dim) +
               epsilon * projector(ket);
  return pps;
}

Matrix zz_hamiltonian(const SpinSystem& system,
                      const std::vector<std::pair<int, int>>& pairs) {
  const int n = system.n_qubits();
  const Eigen::Index dim = Eigen::Index(1) << n;
  Matrix h = Matrix::Zero(dim, dim);
  for (const auto& [a, b] : pairs) {
    const double j = system.j(a, b);
    if (j == 0.0)
      throw std::invalid_argument("requested pair has zero coupling");
    h += (kPi / 2) * j * embed(pauli_z(), a, n) * embed(pauli_z(), b, n);
  }
  return h;
}

std::vector<std::pair<int, int>> nearest_neighbor_pairs(int n_qubits) {
  std::vector<std::pair<int, int>> pairs;
  for (int q = 1; q < n_qubits; ++q) pairs.emplace_back(q, q + 1);
  return pairs;
}

std::vector<std::pair<int, int>> all_coupled_pairs(const SpinSystem& system) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= system.n_qubits(); ++a)
    for (int b = a + 1; b <= system.n_qubits(); ++b)
      if (system.j(a, b) != 0.0) pairs.emplace_back(a, b);
  return pairs;
}

Matrix zz_hamiltonian_full(const SpinSystem& system) {
  return zz_hamiltonian(system, all_coupled_pairs(system));
}

std::vector<Matrix> single_qubit_decoherence_kraus(double duration_s,
                                                   double t1_s, double t2_s) {
  if (duration_s < 0.0)
    throw std::invalid_argument("decoherence duration must be nonnegative");
  if (!(t1_s > 0.0) || !(t2_s > 0.0) || t2_s > 2.0 * t1_s)
    throw std::invalid_argument("unphysical relaxation times");
  // population relaxation toward I/2 (infinite-temperature limit)
  const double gamma = 1.0 - std::exp(-duration_s / t1_s);
  const double keep = std::sqrt(1.0 - gamma);
  const double hop = std::sqrt(gamma);
  const double half = std::sqrt(0.5);
  std::vector<Matrix> gad(4, Matrix::Zero(2, 2));
  gad[0] << 1, 0, 0, keep;
  gad[1] << 0, hop, 0, 0;
  gad[2] << keep, 0, 0, 1;
  gad[3] << 0, 0, hop, 0;
  for (Matrix& k : gad) k *= half;

  // pure dephasing on top, so the total coherence factor is exp(-t/T2)
  const double dephase_rate = 1.0 / t2_s - 0.5 / t1_s;
  const double pz = 0.5 * (1.0 - std::exp(-duration_s * dephase_rate));
  std::vector<Matrix> kraus;
  kraus.reserve(8);
  for (const Matrix& k : gad) {
    kraus.push_back(std::sqrt(1.0 - pz) * k);
    kraus.push_back(std::sqrt(pz) * pauli_z() * k);
  }
  return kraus;
}

Matrix apply_decoherence(const Matrix& rho, double duration_s,
                         const SpinSystem& system) {
  if (duration_s < 0.0)
    throw std::invalid_argument("decoherence duration must be nonnegative");
  const int n = system.n_qubits();
  Matrix out = rho;
  for (int q = 1; q <= n; ++q) {
    const auto kraus = single_qubit_decoherence_kraus(
        duration_s, system.t1_s[q - 1], system.t2_s[q - 1]);
    Matrix next = Matrix::Zero(rho.rows(), rho.cols());
    for (const Matrix& k : kraus) {
      const Matrix full = embed(k, q, n);
      next += full * out * full.adjoint();
    }
    out = next;
  }
  return out;
}

Matrix schedule_unitary(const Schedule& schedule, const SpinSystem& system) {
  const int n = system.n_qubits();
  const Matrix h = zz_hamiltonian_full(system);
  Matrix u = identity(Eigen::Index(1) << n);
  for (const TimedEvent& e : schedule.events) {
    if (const auto* p = std::get_if<Pulse>(&e))
      u = pulse_unitary(*p, n) * u;
    else
      u = expm_hermitian(h, std::get<Delay>(e).duration_s) * u;
  }
  return u;
}

Matrix simulate_schedule(const Matrix& rho0, const Schedule& schedule,
                         const SpinSystem& system, const NoiseParams& noise) {
  const int n = system.n_qubits();
  if (rho0.rows() != (Eigen::Index(1) << n))
    throw std::invalid_argument("simulate_schedule: state dimension mismatch");
  const Matrix h = zz_hamiltonian_full(system);
  Matrix rho = rho0;
  for (const TimedEvent& e : schedule.events) {
    if (const auto* p = std::get_if<Pulse>(&e)) {
      const Matrix u = pulse_unitary(*p, n);
      rho = u * rho * u.adjoint();
      continue;
    }
    const double duration = std::get<Delay>(e).duration_s;
    if (!noise.enabled) {
      const Matrix u = expm_hermitian(h, duration);
      rho = u * rho * u.adjoint();
      continue;
    }
    const int slices = std::max(noise.trotter_slices, 1);
    const double dt = duration / slices;
    const Matrix u = expm_hermitian(h, dt);
    // embed the per-qubit Kraus sets once per delay, not once per slice
    std::vector<std::vector<Matrix>> kraus(n);
    for (int q = 1; q <= n; ++q)
      for (const Matrix& k : single_qubit_decoherence_kraus(
               dt, system.t1_s[q - 1], system.t2_s[q - 1]))
        kraus[q - 1].push_back(embed(k, q, n));
    for (int s = 0; s < slices; ++s) {
      rho = u * rho * u.adjoint();
      for (const auto& qubit_kraus : kraus) {
        Matrix next = Matrix::Zero(rho.rows(), rho.cols());
        for (const Matrix& k : qubit_kraus) next += k * rho * k.adjoint();
        rho = next;
      }
    }
  }
  return rho;
}

double fidelity(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("fidelity: dimension mismatch");
  const double pa = (a * a).trace().real();
  const double pb = (b * b).trace().real();
  if (pa <= 0.0 || pb <= 0.0)
    throw std::invalid_argument("fidelity: zero-purity input");
  return (a * b).trace().real() / std::sqrt(pa * pb);
}

double attenuated_correlation(const Matrix& theory, const Matrix& experiment) {
  if (theory.rows() != experiment.rows() ||
      theory.cols() != experiment.cols())
    throw std::invalid_argument("attenuated_correlation: dimension mismatch");
  const double pt = (theory * theory).trace().real();
  if (pt <= 0.0)
    throw std::invalid_argument("attenuated_correlation: zero theory purity");
  return (theory * experiment).trace().real() / pt;
}

std::vector<PauliValue> pauli_set(const Matrix& rho) {
  if (rho.rows() != 8 || rho.cols() != 8)
    throw std::invalid_argument("pauli_set expects a 3-qubit state");
  std::vector<PauliValue> values;
  values.reserve(64);
  for (char l : kPauliLetters)
    for (char m : kPauliLetters)
      for (char r : kPauliLetters) {
        const std::string label{l, m, r};
        values.push_back({label, expectation(rho, pauli_string(label))});
      }
  return values;
}

Matrix reconstruct_from_pauli_set(const std::vector<PauliValue>& values) {
  if (values.size() != 64)
    throw std::invalid_argument("pauli set must have 64 entries");
  bool seen[64] = {};
  Matrix rho = Matrix::Zero(8, 8);
  for (const PauliValue& v : values) {
    if (v.label.size() != 3)
      throw std::invalid_argument("bad pauli label: " + v.label);
    int index = 0;
    for (char c : v.label) {
      const char* p = std::find(std::begin(kPauliLetters),
                                std::end(kPauliLetters), c);
      if (p == std::end(kPauliLetters))
        throw std::invalid_argument("bad pauli label: " + v.label);
      index = 4 * index + static_cast<int>(p - std::begin(kPauliLetters));
    }
    if (seen[index])
      throw std::invalid_argument("duplicate pauli label: " + v.label);
    seen[index] = true;
    rho += v.value / 8.0 * pauli_string(v.label);
  }
  for (bool s : seen)
    if (!s) throw std::invalid_argument("pauli set is missing labels");
  return rho;
}

std::vector<std::pair<double, double>> correlation_sweep(
    const PseudoPureState& initial, const std::vector<double>& phi_grid) {
  if (initial.matrix.rows() != 8)
    throw std::invalid_argument("correlation_sweep expects a 3-qubit state");
  const Matrix obs = pauli_string("XIX");
  std::vector<std::pair<double, double>> out;
  out.reserve(phi_grid.size());
  for (double phi : phi_grid) {
    const Matrix u = xy_unitary_closed_form(phi);
    out.emplace_back(phi, expectation(u * initial.matrix * u.adjoint(), obs));
  }
  return out;
}

Protocol protocol_from_name(std::string_view name) {
  if (name == "bell-010") return Protocol::Bell010;
  if (name == "bell-101") return Protocol::Bell101;
  if (name == "w") return Protocol::W;
  if (name == "ghz") return Protocol::Ghz;
  throw std::invalid_argument("unknown protocol: " + std::string(name));
}

std::string_view protocol_name(Protocol p) {
  switch (p) {
    case Protocol::Bell010: return "bell-010";
    case Protocol::Bell101: return "bell-101";
    case Protocol::W: return "w";
    case Protocol::Ghz: return "ghz";
  }
  throw std::logic_error("invalid protocol");
}

std::string_view protocol_initial_label(Protocol p) {
  switch (p) {
    case Protocol::Bell010: return "010";
    case Protocol::Bell101: return "101";
    case Protocol::W: return "101";
    case Protocol::Ghz: return "000";
  }
  throw std::logic_error("invalid protocol");
}

double protocol_phi(Protocol p) {
  switch (p) {
    case Protocol::Bell010:
    case Protocol::Bell101: return bell_phi();
    case Protocol::W: return w_phi();
    case Protocol::Ghz: return ghz_phi();
  }
  throw std::logic_error("invalid protocol");
}

Vector protocol_target_state(Protocol p) {
  switch (p) {
    case Protocol::Bell010: return bell_target_010();
    case Protocol::Bell101: return bell_target_101();
    case Protocol::W: return w_target();
    case Protocol::Ghz: return ghz_target();
  }
  throw std::logic_error("invalid protocol");
}

GateSequence protocol_gate_sequence(Protocol p) {
  GateSequence seq;
  if (p == Protocol::Ghz)
    for (int q = 1; q <= 3; ++q)
      seq.gates.push_back(Rotation{q, Axis::Y, kPi / 2});
  seq.append(compile_xy_unitary(protocol_phi(p)));
  if (p == Protocol::W) seq.append(compile_z_rotation(2));
  if (p == Protocol::Ghz)
    for (int q = 1; q <= 3; ++q)
      seq.gates.push_back(Rotation{q, Axis::X, kPi / 2});
  return seq;
}

Schedule protocol_schedule(Protocol p, const SpinSystem& system) {
  return lower_to_schedule(protocol_gate_sequence(p), system);
}

double decoherence_estimate(Protocol p, const SpinSystem& system,
                            int trotter_slices) {
  const Schedule schedule = protocol_schedule(p, system);
  const Matrix rho0 = make_pps(protocol_initial_label(p), 1.0).matrix;
  const Matrix clean = simulate_schedule(rho0, schedule, system);
  NoiseParams noise;
  noise.enabled = true;
  noise.trotter_slices = trotter_slices;
  const Matrix noisy = simulate_schedule(rho0, schedule, system, noise);
  return attenuated_correlation(clean, noisy);
}

}  // namespace xysim
