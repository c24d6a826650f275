// xysim: exact 3-spin XY chain simulator with an NMR pulse compiler.
//
// Subcommands: dynamics, prepare, pauli-set, sweep-correlation, verify.
// Exit codes: 0 success, 1 verification/validation failure, 2 usage error.
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "xysim/reports.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output path: " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing output: " + path);
}

xysim::SpinSystem load_system(const std::string& path) {
  return path.empty() ? xysim::SpinSystem::chfbr2()
                      : xysim::SpinSystem::from_json_file(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 3-spin Heisenberg-XY chain simulator and NMR compiler"};
  app.require_subcommand(1);

  std::string out_path;
  std::string system_path;
  xysim::PhiGrid grid;
  std::uint64_t seed = xysim::kDefaultSeed;
  int slices = 32;

  const auto add_common = [&](CLI::App* cmd, bool with_grid) {
    cmd->add_option("--out", out_path, "Output file (stdout when omitted)");
    cmd->add_option("--spin-system", system_path,
                    "Spin-system JSON config (built-in CHFBr2 when omitted)");
    if (with_grid) {
      cmd->add_option("--phi-start", grid.start, "Grid start (rad)");
      cmd->add_option("--phi-end", grid.end, "Grid end (rad)");
      cmd->add_option("--phi-step", grid.step, "Grid step (rad), default pi/628");
    }
  };

  // dynamics
  auto* dynamics = app.add_subcommand(
      "dynamics", "Entanglement measures along the XY evolution (CSV)");
  std::string initial = "010";
  dynamics
      ->add_option("--initial", initial,
                   "Initial state: 3-bit label or 'superposition'")
      ->check(CLI::IsMember({"000", "001", "010", "011", "100", "101", "110",
                             "111", "superposition"}));
  add_common(dynamics, true);

  // prepare
  auto* prepare = app.add_subcommand(
      "prepare", "Run a preparation protocol and report the final state (JSON)");
  std::string protocol_name = "bell-010";
  std::string mode_name = "ideal";
  prepare->add_option("--protocol", protocol_name, "Protocol")
      ->check(CLI::IsMember({"bell-010", "bell-101", "w", "ghz"}));
  prepare->add_option("--mode", mode_name, "Pipeline mode")
      ->check(CLI::IsMember({"ideal", "compiled", "schedule", "schedule-noise"}));
  prepare->add_option("--trotter-slices", slices,
                      "Noise slices per delay (schedule-noise mode)");
  add_common(prepare, false);

  // pauli-set
  auto* pauli = app.add_subcommand(
      "pauli-set", "All 64 three-qubit Pauli expectations (CSV)");
  std::string pauli_protocol;
  std::string pauli_input;
  pauli->add_option("--protocol", pauli_protocol,
                    "Use the ideal final state of this protocol")
      ->check(CLI::IsMember({"bell-010", "bell-101", "w", "ghz"}));
  pauli->add_option("--in", pauli_input,
                    "Read the state from a prepare-report JSON file");
  add_common(pauli, false);

  // sweep-correlation
  auto* sweep = app.add_subcommand(
      "sweep-correlation", "End-qubit <sx sx> correlation along phi (CSV)");
  std::string sweep_initial = "010";
  std::string sweep_mode = "ideal";
  sweep->add_option("--initial", sweep_initial, "Initial basis label")
      ->check(CLI::IsMember(
          {"000", "001", "010", "011", "100", "101", "110", "111"}));
  sweep->add_option("--mode", sweep_mode,
                    "ideal, or schedule-noise to add a noisy column")
      ->check(CLI::IsMember({"ideal", "schedule-noise"}));
  sweep->add_option("--trotter-slices", slices, "Noise slices per delay");
  add_common(sweep, true);

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Compiler equivalence suite over random angles");
  xysim::VerifyConfig verify_config;
  verify->add_option("--phi-samples", verify_config.phi_samples,
                     "Random angles per check");
  verify->add_option("--seed", seed, "PRNG seed (default 12345)");
  verify
      ->add_flag("--inject-error", verify_config.inject_error,
                 "Corrupt one compiled rotation (negative control)")
      ->group("");  // hidden
  add_common(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*dynamics) {
      write_output(out_path, xysim::dynamics_csv(initial, grid.points()));
    } else if (*prepare) {
      const auto report = xysim::prepare_report(
          xysim::protocol_from_name(protocol_name),
          xysim::mode_from_name(mode_name), load_system(system_path), slices);
      write_output(out_path, report.dump(2) + "\n");
    } else if (*pauli) {
      if (pauli_protocol.empty() == pauli_input.empty())
        throw std::runtime_error(
            "pauli-set needs exactly one of --protocol or --in");
      xysim::Matrix rho;
      if (!pauli_protocol.empty()) {
        rho = xysim::projector(xysim::protocol_target_state(
            xysim::protocol_from_name(pauli_protocol)));
      } else {
        std::ifstream in(pauli_input);
        if (!in)
          throw std::runtime_error("cannot open input: " + pauli_input);
        nlohmann::ordered_json doc;
        in >> doc;
        rho = xysim::density_from_report(doc);
      }
      write_output(out_path, xysim::pauli_set_csv(rho));
    } else if (*sweep) {
      write_output(out_path,
                   xysim::correlation_csv(sweep_initial, grid.points(),
                                          sweep_mode == "schedule-noise",
                                          load_system(system_path), slices));
    } else if (*verify) {
      verify_config.seed = seed;
      const xysim::VerifyReport report =
          xysim::run_verify(verify_config, load_system(system_path));
      write_output(out_path, report.text());
      if (!report.all_pass()) return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
