// NMR spin-system parameters: gyromagnetic ratios relative to spin 1, the
// scalar J-coupling matrix, and per-spin relaxation times.
#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace xysim {

struct SpinSystem {
  std::vector<std::string> names;
  std::vector<double> gamma_ratios;  // normalized so spin 1 is 1
  Eigen::MatrixXd j_hz;              // symmetric, zero diagonal
  std::vector<double> t1_s;
  std::vector<double> t2_s;

  int n_qubits() const { return static_cast<int>(names.size()); }
  double j(int a, int b) const;  // 1-based

  /// Throws std::invalid_argument on inconsistent sizes, an asymmetric or
  /// nonzero-diagonal coupling matrix, or t2 > 2 t1.
  void validate() const;

  /// The 1H-13C-19F system of dibromofluoromethane: J12 = 224.5 Hz,
  /// J23 = -310.9 Hz, J13 = 49.7 Hz, with the measured T1/T2 times.
  static SpinSystem chfbr2();

  /// Loads {"spins": [{"name", "gamma_ratio", "t1_s", "t2_s"}, ...],
  ///        "j_hz": [[...], ...]} and validates.
  static SpinSystem from_json_file(const std::string& path);
  static SpinSystem from_json_text(const std::string& text);
};

}  // namespace xysim
