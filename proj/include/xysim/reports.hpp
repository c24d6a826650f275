// Command-level operations behind the CLI: dynamics and correlation CSV
// tables, preparation reports, Pauli-set listings, and the compiler
// verification suite. Everything here is deterministic for a fixed config,
// and all numbers are serialized with 12 significant digits.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "xysim/nmr.hpp"

namespace xysim {

inline constexpr std::uint64_t kDefaultSeed = 12345;

enum class PipelineMode { Ideal, Compiled, Schedule, ScheduleNoise };

PipelineMode mode_from_name(std::string_view name);
std::string_view mode_name(PipelineMode mode);

struct PhiGrid {
  double start = 0.0;
  double end = 3.141592653589793;
  double step = 3.141592653589793 / 628.0;

  /// start, start+step, ... up to end (inclusive within roundoff);
  /// throws unless step > 0.
  std::vector<double> points() const;
};

double round_sig(double value, int digits = 12);
std::string format_sig(double value, int digits = 12);

/// CSV `phi,c12,c13,c23,c1_23,c123` for an initial basis label ("010", ...)
/// or "superposition" (|+>|+>|+>).
std::string dynamics_csv(const std::string& initial,
                         const std::vector<double>& phi_grid);

/// Runs a preparation protocol through the selected pipeline and reports
/// the final density matrix, overlap metrics against the ideal target, the
/// entanglement profile, and (for schedule modes) the total duration.
nlohmann::ordered_json prepare_report(Protocol protocol, PipelineMode mode,
                                      const SpinSystem& system,
                                      int trotter_slices = 32);

/// CSV `label,value` of all 64 Pauli expectations.
std::string pauli_set_csv(const Matrix& rho);

/// Final density matrix embedded in a prepare report.
Matrix density_from_report(const nlohmann::ordered_json& report);

/// CSV `phi,xx_corr[,xx_corr_noisy]`; the noisy column lowers the compiled
/// propagator to a schedule at every grid point and simulates it with the
/// relaxation channel.
std::string correlation_csv(const std::string& initial,
                            const std::vector<double>& phi_grid,
                            bool with_noisy, const SpinSystem& system,
                            int trotter_slices = 32);

struct VerifyConfig {
  int phi_samples = 50;
  std::uint64_t seed = kDefaultSeed;
  bool inject_error = false;  // negative-control hook: corrupts one rotation
};

struct VerifyCheck {
  std::string name;
  double max_residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass() const;
  std::string text() const;  // one line per check
};

/// Equivalence suite over seeded random angles: closed-form propagator vs
/// spectral exponential, the compiled gate sequence, ZZZ synthesis, the
/// composite Z-rotation, and full schedule lowering.
VerifyReport run_verify(const VerifyConfig& config, const SpinSystem& system);

}  // namespace xysim
