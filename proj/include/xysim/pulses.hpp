// Gate IR for the NMR-native set (single-qubit rotations, ZZ and ZZZ
// evolutions), the compiler that re-expresses the 3-spin XY propagator in
// that set, lowering of ZZ gates to refocused delay schedules, and
// equivalence verification of the results.
#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "xysim/linalg.hpp"
#include "xysim/spin_system.hpp"

namespace xysim {

struct Rotation {
  int qubit = 1;
  Axis axis = Axis::X;
  double angle = 0.0;  // exp(-i angle sigma/2)
};

struct ZZ {
  int q1 = 1;
  int q2 = 2;
  double angle = 0.0;  // exp(-i angle sz sz)
};

struct ZZZ {
  double angle = 0.0;  // exp(-i angle sz sz sz), three qubits
};

using Gate = std::variant<Rotation, ZZ, ZZZ>;

struct GateSequence {
  std::vector<Gate> gates;  // time order: gates.front() acts first

  /// Reverses a right-to-left operator product into time order.
  static GateSequence from_operator_order(std::vector<Gate> ops);

  void append(const GateSequence& other);
};

struct Pulse {
  int qubit = 1;
  Axis axis = Axis::X;
  double angle = 0.0;  // instantaneous ideal rotation
};

struct Delay {
  double duration_s = 0.0;
};

using TimedEvent = std::variant<Pulse, Delay>;

struct Schedule {
  std::vector<TimedEvent> events;
  double total_duration() const;  // sum of delays
};

/// Full 2^n unitary of one gate, identities on untouched qubits.
Matrix gate_unitary(const Gate& gate, int n_qubits);

/// Time-ordered product of the whole sequence.
Matrix sequence_unitary(const GateSequence& seq, int n_qubits);

/// The 3-spin XY propagator at angle phi expressed with ZZ evolutions,
/// three-spin ZZZ terms and single-qubit rotations. With inline_zzz the
/// ZZZ terms are expanded through compile_zzz.
GateSequence compile_xy_unitary(double phi, bool inline_zzz = false);

/// exp(-i angle sz sz sz) from ZZ(1,2), ZZ(2,3) evolutions and rotations of
/// the middle spin; only the inner ZZ(2,3) angle scales with the target.
GateSequence compile_zzz(double angle);

/// Composite Z-rotation [pi/2]_Y - [angle]_X - [pi/2]_{-Y} of one qubit.
GateSequence compile_z_rotation(int qubit, double angle = 1.5707963267948966);

/// Refocused realization of a ZZ evolution on a coupled pair: two delays of
/// tau/2 = |phi| / (pi |J|), each followed by a pi pulse on the spectator
/// spin. All couplings to the spectator cancel; the pair coupling runs for
/// the full tau, realizing exp(-i sign(J) |phi| sz sz). Negative phi or J
/// flips the realized sign, never the delay.
Schedule expand_zz_to_schedule(int q1, int q2, double phi,
                               const SpinSystem& system);

/// Lowers a gate sequence to pulses and delays: rotations become pulses,
/// ZZZ terms are inlined, and every ZZ gate is expanded to a refocused
/// delay block. When the realizable ZZ sign disagrees with the requested
/// angle the block is wrapped in pi_x pulses on one pair member, which
/// conjugates the evolution back to the requested sign.
Schedule lower_to_schedule(const GateSequence& seq, const SpinSystem& system);

Schedule scale_delays(Schedule schedule, double factor);

struct EquivalenceReport {
  bool pass = false;
  Complex phase{1.0, 0.0};
  double max_residual = 0.0;
  double tol = 0.0;
};

EquivalenceReport verify_equivalence(const GateSequence& seq, int n_qubits,
                                     const Matrix& target, double tol = 1e-9);
EquivalenceReport verify_equivalence(const Schedule& schedule,
                                     const SpinSystem& system,
                                     const Matrix& target, double tol = 1e-9);

// JSON forms: gates as {"type": "rotation"|"zz"|"zzz", "qubits": [...],
// "axis": "x|y|z", "angle": a}; schedules as {"events": [{"pulse": {...}}
// or {"delay_s": d}, ...]}.
nlohmann::json to_json(const Gate& gate);
nlohmann::json to_json(const GateSequence& seq);
nlohmann::json to_json(const Schedule& schedule);
Gate gate_from_json(const nlohmann::json& doc);
GateSequence gate_sequence_from_json(const nlohmann::json& doc);
Schedule schedule_from_json(const nlohmann::json& doc);

}  // namespace xysim
