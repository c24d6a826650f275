#include "xysim/pulses.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "xysim/nmr.hpp"

namespace xysim {

namespace {

constexpr double kPi = std::numbers::pi;

void check_qubit(int q, int n) {
  if (q < 1 || q > n)
    throw std::invalid_argument("gate qubit index out of range");
}

// diagonal exp(-i angle sz...sz) over the given 1-based qubits
Matrix zz_phase_unitary(double angle, const std::vector<int>& qubits, int n) {
  const Eigen::Index dim = Eigen::Index(1) << n;
  Matrix u = Matrix::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    int parity = 1;
    for (int q : qubits)
      if ((b >> (n - q)) & 1) parity = -parity;
    u(b, b) = std::exp(Complex(0, -angle * parity));
  }
  return u;
}

int spectator_of(int q1, int q2) {
  // unique third spin of a 3-spin chain
  return 6 - q1 - q2;
}

}  // namespace

GateSequence GateSequence::from_operator_order(std::vector<Gate> ops) {
  std::reverse(ops.begin(), ops.end());
  return GateSequence{std::move(ops)};
}

void GateSequence::append(const GateSequence& other) {
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

double Schedule::total_duration() const {
  double total = 0.0;
  for (const TimedEvent& e : events)
    if (const auto* d = std::get_if<Delay>(&e)) total += d->duration_s;
  return total;
}

Matrix gate_unitary(const Gate& gate, int n_qubits) {
  if (const auto* r = std::get_if<Rotation>(&gate)) {
    check_qubit(r->qubit, n_qubits);
    return embed(rotation_matrix(r->axis, r->angle), r->qubit, n_qubits);
  }
  if (const auto* zz = std::get_if<ZZ>(&gate)) {
    check_qubit(zz->q1, n_qubits);
    check_qubit(zz->q2, n_qubits);
    if (zz->q1 == zz->q2)
      throw std::invalid_argument("zz gate needs two distinct qubits");
    return zz_phase_unitary(zz->angle, {zz->q1, zz->q2}, n_qubits);
  }
  const auto& zzz = std::get<ZZZ>(gate);
  if (n_qubits != 3)
    throw std::invalid_argument("zzz gate is defined on three qubits");
  return zz_phase_unitary(zzz.angle, {1, 2, 3}, n_qubits);
}

Matrix sequence_unitary(const GateSequence& seq, int n_qubits) {
  Matrix u = identity(Eigen::Index(1) << n_qubits);
  for (const Gate& g : seq.gates) u = gate_unitary(g, n_qubits) * u;
  return u;
}

GateSequence compile_zzz(double angle) {
  const double q = kPi / 2;
  // right-to-left operator product; only the inner ZZ(2,3) angle scales
  return GateSequence::from_operator_order({
      Rotation{2, Axis::X, q},
      ZZ{1, 2, kPi / 4},
      Rotation{2, Axis::Y, q},
      ZZ{2, 3, angle},
      Rotation{2, Axis::Y, q},
      ZZ{1, 2, kPi / 4},
      Rotation{2, Axis::Y, -kPi},
      Rotation{2, Axis::X, -q},
  });
}

GateSequence compile_xy_unitary(double phi, bool inline_zzz) {
  const double q = kPi / 2;
  GateSequence seq = GateSequence::from_operator_order({
      Rotation{1, Axis::Y, q},
      Rotation{3, Axis::X, -q},
      ZZZ{kPi / 8},
      Rotation{2, Axis::Y, q},
      ZZ{1, 2, phi},
      Rotation{2, Axis::Y, -q},
      ZZZ{-kPi / 8},
      Rotation{1, Axis::Y, -q},
      Rotation{3, Axis::X, q},
      Rotation{1, Axis::X, -q},
      Rotation{3, Axis::Y, q},
      ZZZ{kPi / 8},
      Rotation{2, Axis::Y, q},
      ZZ{2, 3, phi},
      Rotation{2, Axis::Y, -q},
      ZZZ{-kPi / 8},
      Rotation{1, Axis::X, q},
      Rotation{3, Axis::Y, -q},
  });
  if (!inline_zzz) return seq;

  GateSequence expanded;
  for (const Gate& g : seq.gates) {
    if (const auto* zzz = std::get_if<ZZZ>(&g))
      expanded.append(compile_zzz(zzz->angle));
    else
      expanded.gates.push_back(g);
  }
  return expanded;
}

GateSequence compile_z_rotation(int qubit, double angle) {
  return GateSequence{{
      Rotation{qubit, Axis::Y, kPi / 2},
      Rotation{qubit, Axis::X, angle},
      Rotation{qubit, Axis::Y, -kPi / 2},
  }};
}

Schedule expand_zz_to_schedule(int q1, int q2, double phi,
                               const SpinSystem& system) {
  if (system.n_qubits() != 3)
    throw std::invalid_argument("delay refocusing assumes a 3-spin system");
  const double j = system.j(q1, q2);
  if (j == 0.0)
    throw std::invalid_argument("cannot realize zz on an uncoupled pair");
  Schedule schedule;
  if (phi == 0.0) return schedule;

  const double tau = 2.0 * std::abs(phi) / (kPi * std::abs(j));
  const int spectator = spectator_of(q1, q2);
  schedule.events = {
      Delay{tau / 2},
      Pulse{spectator, Axis::X, kPi},
      Delay{tau / 2},
      Pulse{spectator, Axis::X, kPi},
  };
  return schedule;
}

Schedule lower_to_schedule(const GateSequence& seq, const SpinSystem& system) {
  Schedule out;
  for (const Gate& g : seq.gates) {
    if (const auto* r = std::get_if<Rotation>(&g)) {
      out.events.push_back(Pulse{r->qubit, r->axis, r->angle});
      continue;
    }
    if (const auto* zzz = std::get_if<ZZZ>(&g)) {
      const Schedule inner = lower_to_schedule(compile_zzz(zzz->angle), system);
      out.events.insert(out.events.end(), inner.events.begin(),
                        inner.events.end());
      continue;
    }
    const auto& zz = std::get<ZZ>(g);
    if (zz.angle == 0.0) continue;
    const Schedule block =
        expand_zz_to_schedule(zz.q1, zz.q2, zz.angle, system);
    // the delay block realizes exp(-i sign(J)|phi| zz); a pi_x sandwich on
    // one pair member conjugates it to the opposite sign when needed
    const bool wrap = system.j(zz.q1, zz.q2) * zz.angle < 0.0;
    if (wrap) out.events.push_back(Pulse{zz.q1, Axis::X, kPi});
    out.events.insert(out.events.end(), block.events.begin(),
                      block.events.end());
    if (wrap) out.events.push_back(Pulse{zz.q1, Axis::X, kPi});
  }
  return out;
}

Schedule scale_delays(Schedule schedule, double factor) {
  for (TimedEvent& e : schedule.events)
    if (auto* d = std::get_if<Delay>(&e)) d->duration_s *= factor;
  return schedule;
}

EquivalenceReport verify_equivalence(const GateSequence& seq, int n_qubits,
                                     const Matrix& target, double tol) {
  const PhaseReport r =
      equal_up_to_global_phase(sequence_unitary(seq, n_qubits), target, tol);
  return EquivalenceReport{r.equal, r.phase, r.max_residual, tol};
}

EquivalenceReport verify_equivalence(const Schedule& schedule,
                                     const SpinSystem& system,
                                     const Matrix& target, double tol) {
  const PhaseReport r = equal_up_to_global_phase(
      schedule_unitary(schedule, system), target, tol);
  return EquivalenceReport{r.equal, r.phase, r.max_residual, tol};
}

nlohmann::json to_json(const Gate& gate) {
  nlohmann::json doc;
  if (const auto* r = std::get_if<Rotation>(&gate)) {
    doc["type"] = "rotation";
    doc["qubits"] = {r->qubit};
    doc["axis"] = axis_name(r->axis);
    doc["angle"] = r->angle;
  } else if (const auto* zz = std::get_if<ZZ>(&gate)) {
    doc["type"] = "zz";
    doc["qubits"] = {zz->q1, zz->q2};
    doc["angle"] = zz->angle;
  } else {
    doc["type"] = "zzz";
    doc["qubits"] = {1, 2, 3};
    doc["angle"] = std::get<ZZZ>(gate).angle;
  }
  return doc;
}

nlohmann::json to_json(const GateSequence& seq) {
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& g : seq.gates) gates.push_back(to_json(g));
  return nlohmann::json{{"gates", gates}};
}

nlohmann::json to_json(const Schedule& schedule) {
  nlohmann::json events = nlohmann::json::array();
  for (const TimedEvent& e : schedule.events) {
    if (const auto* p = std::get_if<Pulse>(&e))
      events.push_back({{"pulse",
                         {{"qubit", p->qubit},
                          {"axis", axis_name(p->axis)},
                          {"angle", p->angle}}}});
    else
      events.push_back({{"delay_s", std::get<Delay>(e).duration_s}});
  }
  return nlohmann::json{{"events", events}};
}

Gate gate_from_json(const nlohmann::json& doc) {
  const std::string type = doc.at("type").get<std::string>();
  const double angle = doc.at("angle").get<double>();
  const auto& qubits = doc.at("qubits");
  if (type == "rotation")
    return Rotation{qubits.at(0).get<int>(),
                    axis_from_name(doc.at("axis").get<std::string>()), angle};
  if (type == "zz")
    return ZZ{qubits.at(0).get<int>(), qubits.at(1).get<int>(), angle};
  if (type == "zzz") return ZZZ{angle};
  throw std::invalid_argument("unknown gate type: " + type);
}

GateSequence gate_sequence_from_json(const nlohmann::json& doc) {
  GateSequence seq;
  for (const auto& g : doc.at("gates")) seq.gates.push_back(gate_from_json(g));
  return seq;
}

Schedule schedule_from_json(const nlohmann::json& doc) {
  Schedule schedule;
  for (const auto& e : doc.at("events")) {
    if (e.contains("pulse")) {
      const auto& p = e.at("pulse");
      schedule.events.push_back(
          Pulse{p.at("qubit").get<int>(),
                axis_from_name(p.at("axis").get<std::string>()),
                p.at("angle").get<double>()});
    } else {
      schedule.events.push_back(Delay{e.at("delay_s").get<double>()});
    }
  }
  return schedule;
}

}  // namespace xysim
