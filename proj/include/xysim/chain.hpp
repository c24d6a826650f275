// XY spin chains: Hamiltonian construction, exact propagators, state
// evolution parameterized by the dimensionless angle phi = J t / sqrt(2),
// and the entangled-state preparation protocols built on them.
#pragma once

#include <vector>

#include "xysim/linalg.hpp"

namespace xysim {

struct ChainSpec {
  int n_qubits = 0;
  std::vector<double> couplings;  // J_i between spins i and i+1, size n-1

  static ChainSpec uniform(int n_qubits, double j);
  bool is_uniform() const;
  void validate() const;
};

/// sum_i (J_i/2)(sx^i sx^{i+1} + sy^i sy^{i+1}); conserves total sz.
Matrix xy_hamiltonian(const ChainSpec& spec);

/// Exact 8x8 propagator of the uniform 3-spin chain at angle phi, built
/// entrywise from cos^2(phi), cos(2 phi), sin^2(phi) and sin(2 phi).
Matrix xy_unitary_closed_form(double phi);

/// Checks the two-factor split of the 3-spin propagator: the factor
/// generators commute exactly and the factored product matches the direct
/// exponential within tol.
bool commuting_split_check(double phi, double tol = 1e-12);

/// Applies the chain propagator at angle phi. Uniform 3-spin chains take
/// the closed form; everything else goes through the spectral exponential
/// with phi measured against the first coupling.
Vector evolve(const Vector& state, const ChainSpec& spec, double phi);

// protocol angles
double bell_phi();  // pi/4
double w_phi();     // arctan(sqrt 2)/2
double ghz_phi();   // pi/2

struct ProtocolResult {
  Vector final_state;
  Vector intermediate_state;  // post-evolution, before any local rotation
  double phi_used = 0.0;
};

/// Bell pair on the end qubits from |010> or |101>: pure XY evolution at
/// phi = pi/4, no local rotation.
ProtocolResult prepare_bell(const Vector& initial);

/// W state from |101>: evolve at phi = arctan(sqrt 2)/2, then a pi/2
/// Z-rotation of the middle qubit.
ProtocolResult prepare_w(const Vector& initial);
ProtocolResult prepare_w();

/// GHZ state from |000>: pi/2 Y-rotations on all qubits, evolution at
/// phi = pi/2, then pi/2 X-rotations on all qubits.
ProtocolResult prepare_ghz();

// Ideal protocol targets.
Vector bell_target_010();  // -(i/sqrt 2)(|001> + |100>)
Vector bell_target_101();  // -(i/sqrt 2)(|011> + |110>)
Vector w_target();         // (|101> + |011> + |110>)/sqrt 3
Vector ghz_target();       // (|000> + |111>)/sqrt 2

}  // namespace xysim
