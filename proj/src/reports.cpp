#include "xysim/reports.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "xysim/chain.hpp"
#include "xysim/entanglement.hpp"

namespace xysim {

namespace {

constexpr double kPi = std::numbers::pi;

Vector initial_state_from_name(const std::string& initial) {
  if (initial == "superposition") {
    Vector v = Vector::Ones(8);
    return v / std::sqrt(8.0);
  }
  const Vector v = basis_state(initial);
  if (v.size() != 8)
    throw std::invalid_argument("initial state must name 3 qubits");
  return v;
}

ProtocolResult run_ideal(Protocol p) {
  switch (p) {
    case Protocol::Bell010: return prepare_bell(basis_state("010"));
    case Protocol::Bell101: return prepare_bell(basis_state("101"));
    case Protocol::W: return prepare_w();
    case Protocol::Ghz: return prepare_ghz();
  }
  throw std::logic_error("invalid protocol");
}

nlohmann::ordered_json matrix_to_json(const Matrix& m) {
  nlohmann::ordered_json real = nlohmann::ordered_json::array();
  nlohmann::ordered_json imag = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::ordered_json re_row = nlohmann::ordered_json::array();
    nlohmann::ordered_json im_row = nlohmann::ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re_row.push_back(round_sig(m(r, c).real()));
      im_row.push_back(round_sig(m(r, c).imag()));
    }
    real.push_back(re_row);
    imag.push_back(im_row);
  }
  return nlohmann::ordered_json{{"real", real}, {"imag", imag}};
}

nlohmann::ordered_json entanglement_json(const Matrix& rho) {
  nlohmann::ordered_json doc;
  doc["c12"] = round_sig(concurrence(partial_trace(rho, {1, 2})));
  doc["c13"] = round_sig(concurrence(partial_trace(rho, {1, 3})));
  doc["c23"] = round_sig(concurrence(partial_trace(rho, {2, 3})));
  doc["c1_23"] = round_sig(one_tangle(rho, 1));
  const double purity = (rho * rho).trace().real();
  if (purity > 1.0 - 1e-8)
    doc["c123"] = round_sig(three_tangle(rho));
  else
    doc["c123"] = nullptr;  // pure-state measure, undefined after noise
  return doc;
}

}  // namespace

PipelineMode mode_from_name(std::string_view name) {
  if (name == "ideal") return PipelineMode::Ideal;
  if (name == "compiled") return PipelineMode::Compiled;
  if (name == "schedule") return PipelineMode::Schedule;
  if (name == "schedule-noise") return PipelineMode::ScheduleNoise;
  throw std::invalid_argument("unknown mode: " + std::string(name));
}

std::string_view mode_name(PipelineMode mode) {
  switch (mode) {
    case PipelineMode::Ideal: return "ideal";
    case PipelineMode::Compiled: return "compiled";
    case PipelineMode::Schedule: return "schedule";
    case PipelineMode::ScheduleNoise: return "schedule-noise";
  }
  throw std::logic_error("invalid mode");
}

std::vector<double> PhiGrid::points() const {
  if (!(step > 0.0)) throw std::invalid_argument("phi step must be positive");
  std::vector<double> grid;
  for (int k = 0;; ++k) {
    const double phi = start + k * step;
    if (phi > end + 0.5 * step) break;
    grid.push_back(phi);
  }
  return grid;
}

double round_sig(double value, int digits) {
  return std::atof(format_sig(value, digits).c_str());
}

std::string format_sig(double value, int digits) {
  if (value == 0.0) value = 0.0;  // normalize -0
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
  return buf;
}

std::string dynamics_csv(const std::string& initial,
                         const std::vector<double>& phi_grid) {
  const Vector psi0 = initial_state_from_name(initial);
  std::ostringstream out;
  out << "phi,c12,c13,c23,c1_23,c123\n";
  for (const EntanglementProfile& p : dynamics_sweep(psi0, phi_grid))
    out << format_sig(p.phi) << ',' << format_sig(p.c12) << ','
        << format_sig(p.c13) << ',' << format_sig(p.c23) << ','
        << format_sig(p.c1_23) << ',' << format_sig(p.c123) << '\n';
  return out.str();
}

nlohmann::ordered_json prepare_report(Protocol protocol, PipelineMode mode,
                                      const SpinSystem& system,
                                      int trotter_slices) {
  Matrix rho;
  double duration_s = -1.0;
  switch (mode) {
    case PipelineMode::Ideal:
      rho = projector(run_ideal(protocol).final_state);
      break;
    case PipelineMode::Compiled: {
      const Matrix u = sequence_unitary(protocol_gate_sequence(protocol), 3);
      const Matrix rho0 =
          make_pps(protocol_initial_label(protocol), 1.0).matrix;
      rho = u * rho0 * u.adjoint();
      break;
    }
    case PipelineMode::Schedule:
    case PipelineMode::ScheduleNoise: {
      const Schedule schedule = protocol_schedule(protocol, system);
      const Matrix rho0 =
          make_pps(protocol_initial_label(protocol), 1.0).matrix;
      NoiseParams noise;
      noise.enabled = (mode == PipelineMode::ScheduleNoise);
      noise.trotter_slices = trotter_slices;
      rho = simulate_schedule(rho0, schedule, system, noise);
      duration_s = schedule.total_duration();
      break;
    }
  }

  const Matrix target = projector(protocol_target_state(protocol));
  nlohmann::ordered_json doc;
  doc["protocol"] = protocol_name(protocol);
  doc["mode"] = mode_name(mode);
  doc["phi"] = round_sig(protocol_phi(protocol));
  doc["fidelity_vs_ideal"] = round_sig(fidelity(target, rho));
  doc["attenuated_correlation_vs_ideal"] =
      round_sig(attenuated_correlation(target, rho));
  doc["entanglement"] = entanglement_json(rho);
  if (duration_s >= 0.0) doc["total_duration_s"] = round_sig(duration_s);
  doc["final_density_matrix"] = matrix_to_json(rho);
  return doc;
}

std::string pauli_set_csv(const Matrix& rho) {
  std::ostringstream out;
  out << "label,value\n";
  for (const PauliValue& v : pauli_set(rho))
    out << v.label << ',' << format_sig(v.value) << '\n';
  return out.str();
}

Matrix density_from_report(const nlohmann::ordered_json& report) {
  const auto& dm = report.at("final_density_matrix");
  const auto& real = dm.at("real");
  const auto& imag = dm.at("imag");
  const Eigen::Index n = static_cast<Eigen::Index>(real.size());
  Matrix rho(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      rho(r, c) = Complex(real.at(r).at(c).get<double>(),
                          imag.at(r).at(c).get<double>());
  return rho;
}

std::string correlation_csv(const std::string& initial,
                            const std::vector<double>& phi_grid,
                            bool with_noisy, const SpinSystem& system,
                            int trotter_slices) {
  const PseudoPureState pps = make_pps(initial, 1.0);
  const Matrix obs = tensor({pauli_x(), identity(2), pauli_x()});
  std::ostringstream out;
  out << (with_noisy ? "phi,xx_corr,xx_corr_noisy\n" : "phi,xx_corr\n");
  NoiseParams noise;
  noise.enabled = true;
  noise.trotter_slices = trotter_slices;
  for (const auto& [phi, value] : correlation_sweep(pps, phi_grid)) {
    out << format_sig(phi) << ',' << format_sig(value);
    if (with_noisy) {
      const Schedule schedule =
          lower_to_schedule(compile_xy_unitary(phi), system);
      const Matrix rho =
          simulate_schedule(pps.matrix, schedule, system, noise);
      out << ',' << format_sig(expectation(rho, obs));
    }
    out << '\n';
  }
  return out.str();
}

bool VerifyReport::all_pass() const {
  for (const VerifyCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string VerifyReport::text() const {
  std::ostringstream out;
  for (const VerifyCheck& c : checks)
    out << (c.pass ? "PASS" : "FAIL") << ' ' << c.name
        << "  max_residual=" << format_sig(c.max_residual, 3)
        << "  tol=" << format_sig(c.tol, 3) << '\n';
  out << (all_pass() ? "all checks passed" : "some checks FAILED") << '\n';
  return out.str();
}

VerifyReport run_verify(const VerifyConfig& config, const SpinSystem& system) {
  if (config.phi_samples < 1)
    throw std::invalid_argument("phi sample count must be positive");
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  const ChainSpec chain = ChainSpec::uniform(3, 1.0);
  const Matrix h = xy_hamiltonian(chain);

  VerifyReport report;
  const auto add = [&report](const std::string& name, double residual,
                             double tol) {
    report.checks.push_back({name, residual, tol, residual <= tol});
  };

  {  // closed form vs spectral exponential
    double worst = 0.0;
    for (int i = 0; i < config.phi_samples; ++i) {
      const double phi = angle(rng);
      const Matrix diff = xy_unitary_closed_form(phi) -
                          expm_hermitian(h, std::sqrt(2.0) * phi);
      worst = std::max(worst, diff.cwiseAbs().maxCoeff());
    }
    add("closed-form-propagator", worst, 1e-12);
  }

  {  // compiled gate sequence, abstract ZZZ
    double worst = 0.0;
    for (int i = 0; i < config.phi_samples; ++i) {
      const double phi = angle(rng);
      GateSequence seq = compile_xy_unitary(phi);
      if (config.inject_error && i == 0)
        std::get<Rotation>(seq.gates.front()).angle *= -1.0;
      worst = std::max(
          worst,
          verify_equivalence(seq, 3, xy_unitary_closed_form(phi)).max_residual);
    }
    add("xy-compiler", worst, 1e-9);
  }

  {  // compiled gate sequence with ZZZ inlined
    double worst = 0.0;
    for (int i = 0; i < config.phi_samples; ++i) {
      const double phi = angle(rng);
      worst = std::max(worst,
                       verify_equivalence(compile_xy_unitary(phi, true), 3,
                                          xy_unitary_closed_form(phi))
                           .max_residual);
    }
    add("xy-compiler-inlined", worst, 1e-9);
  }

  {  // three-spin phase synthesis
    double worst = 0.0;
    for (int i = 0; i < config.phi_samples; ++i) {
      const double a = angle(rng) - kPi;
      const Matrix target = gate_unitary(ZZZ{a}, 3);
      worst = std::max(
          worst, verify_equivalence(compile_zzz(a), 3, target).max_residual);
    }
    add("zzz-synthesis", worst, 1e-9);
  }

  {  // composite Z-rotation on every qubit
    double worst = 0.0;
    for (int q = 1; q <= 3; ++q) {
      const Matrix target = gate_unitary(Rotation{q, Axis::Z, kPi / 2}, 3);
      worst = std::max(
          worst,
          verify_equivalence(compile_z_rotation(q), 3, target).max_residual);
    }
    add("composite-z-rotation", worst, 1e-10);
  }

  {  // full lowering to refocused delays under all three couplings
    const int samples = std::min(config.phi_samples, 10);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
      const double phi = angle(rng);
      const Schedule schedule =
          lower_to_schedule(compile_xy_unitary(phi), system);
      worst = std::max(worst,
                       verify_equivalence(schedule, system,
                                          xy_unitary_closed_form(phi), 1e-8)
                           .max_residual);
    }
    add("schedule-lowering", worst, 1e-8);
  }

  return report;
}

}  // namespace xysim
