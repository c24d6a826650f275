// The NMR system model: equilibrium deviation and pseudo-pure states, the
// rotating-frame ZZ Hamiltonian, T1/T2 decoherence channels, schedule
// simulation with optional noise, state-overlap metrics, and Pauli-set
// tomography of three-qubit states.
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xysim/linalg.hpp"
#include "xysim/pulses.hpp"
#include "xysim/spin_system.hpp"

namespace xysim {

struct PseudoPureState {
  std::string label;
  double epsilon = 1.0;
  Matrix matrix;  // (1 - eps) I/2^n + eps |label><label|
};

struct NoiseParams {
  bool enabled = false;
  // delays are split into this many slices, alternating coherent evolution
  // with the relaxation channel
  int trotter_slices = 32;
};

/// Traceless deviation sum_i (gamma_i / gamma_1) sz^i.
Matrix equilibrium_deviation(const SpinSystem& system);

/// Pseudo-pure state (1 - eps) I/2^n + eps |label><label|.
PseudoPureState make_pps(std::string_view label, double epsilon);

/// sum over pairs of (pi/2) J_ab sz^a sz^b in rad/s (J in Hz).
Matrix zz_hamiltonian(const SpinSystem& system,
                      const std::vector<std::pair<int, int>>& pairs);

std::vector<std::pair<int, int>> nearest_neighbor_pairs(int n_qubits);
std::vector<std::pair<int, int>> all_coupled_pairs(const SpinSystem& system);

/// Full-coupling ZZ Hamiltonian (every nonzero J), used when simulating
/// schedules so that refocusing is actually exercised.
Matrix zz_hamiltonian_full(const SpinSystem& system);

/// Kraus set of the single-qubit relaxation channel for one duration:
/// populations relax toward I/2 at rate 1/T1, coherences additionally decay
/// at the pure-dephasing rate 1/T2' = 1/T2 - 1/(2 T1), for a total
/// coherence factor exp(-t/T2).
std::vector<Matrix> single_qubit_decoherence_kraus(double duration_s,
                                                   double t1_s, double t2_s);

/// Applies the relaxation channel qubit-by-qubit for the given duration.
Matrix apply_decoherence(const Matrix& rho, double duration_s,
                         const SpinSystem& system);

/// Unitary of a schedule: ideal instantaneous pulses, delays evolving under
/// the full-coupling ZZ Hamiltonian.
Matrix schedule_unitary(const Schedule& schedule, const SpinSystem& system);

/// Runs a schedule on a state. Pulses are ideal; each delay evolves under
/// the full-coupling ZZ Hamiltonian, interleaved with the relaxation
/// channel when noise is enabled.
Matrix simulate_schedule(const Matrix& rho0, const Schedule& schedule,
                         const SpinSystem& system,
                         const NoiseParams& noise = {});

/// Normalized Hilbert-Schmidt overlap Tr(a b)/sqrt(Tr a^2 Tr b^2).
double fidelity(const Matrix& a, const Matrix& b);

/// Tr(theory experiment)/Tr(theory^2); deliberately asymmetric.
double attenuated_correlation(const Matrix& theory, const Matrix& experiment);

struct PauliValue {
  std::string label;  // "III" ... "ZZZ", leftmost letter is qubit 1
  double value = 0.0;
};

/// All 64 three-qubit Pauli expectations, lexicographic with I < X < Y < Z.
std::vector<PauliValue> pauli_set(const Matrix& rho);

/// rho = (1/8) sum <LMR> L(x)M(x)R; inverse of pauli_set.
Matrix reconstruct_from_pauli_set(const std::vector<PauliValue>& values);

/// <sx^1 sx^3> of the state evolved under the XY propagator at each phi.
std::vector<std::pair<double, double>> correlation_sweep(
    const PseudoPureState& initial, const std::vector<double>& phi_grid);

enum class Protocol { Bell010, Bell101, W, Ghz };

Protocol protocol_from_name(std::string_view name);
std::string_view protocol_name(Protocol p);
std::string_view protocol_initial_label(Protocol p);
double protocol_phi(Protocol p);

/// Ideal final state of the protocol (pure).
Vector protocol_target_state(Protocol p);

/// Full gate-level realization: preparation rotations, the compiled XY
/// propagator, and the closing rotations of the protocol.
GateSequence protocol_gate_sequence(Protocol p);

Schedule protocol_schedule(Protocol p, const SpinSystem& system);

/// Attenuated correlation between the noiseless and noisy runs of the
/// lowered protocol schedule from the protocol's pseudo-pure input.
double decoherence_estimate(Protocol p, const SpinSystem& system,
                            int trotter_slices = 32);

}  // namespace xysim
