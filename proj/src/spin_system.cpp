#include "xysim/spin_system.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace xysim {

double SpinSystem::j(int a, int b) const {
  if (a < 1 || a > n_qubits() || b < 1 || b > n_qubits() || a == b)
    throw std::invalid_argument("bad coupling pair");
  return j_hz(a - 1, b - 1);
}

void SpinSystem::validate() const {
  const size_t n = names.size();
  if (n == 0) throw std::invalid_argument("spin system has no spins");
  if (gamma_ratios.size() != n || t1_s.size() != n || t2_s.size() != n)
    throw std::invalid_argument("spin system field sizes disagree");
  if (j_hz.rows() != static_cast<Eigen::Index>(n) ||
      j_hz.cols() != static_cast<Eigen::Index>(n))
    throw std::invalid_argument("coupling matrix size disagrees");
  for (Eigen::Index r = 0; r < j_hz.rows(); ++r) {
    if (j_hz(r, r) != 0.0)
      throw std::invalid_argument("coupling matrix must have zero diagonal");
    for (Eigen::Index c = 0; c < j_hz.cols(); ++c)
      if (j_hz(r, c) != j_hz(c, r))
        throw std::invalid_argument("coupling matrix must be symmetric");
  }
  for (size_t i = 0; i < n; ++i) {
    if (!(t1_s[i] > 0) || !(t2_s[i] > 0))
      throw std::invalid_argument("relaxation times must be positive");
    // physicality bound, equivalently 1/T2 - 1/(2 T1) >= 0
    if (t2_s[i] > 2.0 * t1_s[i])
      throw std::invalid_argument("t2 must not exceed 2 t1");
  }
}

SpinSystem SpinSystem::chfbr2() {
  SpinSystem sys;
  sys.names = {"H", "C", "F"};
  sys.gamma_ratios = {1.0, 0.25, 0.94};
  sys.j_hz = Eigen::MatrixXd::Zero(3, 3);
  sys.j_hz(0, 1) = sys.j_hz(1, 0) = 224.5;
  sys.j_hz(1, 2) = sys.j_hz(2, 1) = -310.9;
  sys.j_hz(0, 2) = sys.j_hz(2, 0) = 49.7;
  sys.t1_s = {6.7, 1.9, 4.0};
  sys.t2_s = {1.4, 0.71, 0.70};
  sys.validate();
  return sys;
}

SpinSystem SpinSystem::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spin-system config: " + path);
  return from_json_text(std::string(std::istreambuf_iterator<char>(in),
                                    std::istreambuf_iterator<char>()));
}

SpinSystem SpinSystem::from_json_text(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  SpinSystem sys;
  for (const auto& spin : doc.at("spins")) {
    sys.names.push_back(spin.at("name").get<std::string>());
    sys.gamma_ratios.push_back(spin.at("gamma_ratio").get<double>());
    sys.t1_s.push_back(spin.at("t1_s").get<double>());
    sys.t2_s.push_back(spin.at("t2_s").get<double>());
  }
  const auto& rows = doc.at("j_hz");
  const size_t n = sys.names.size();
  if (rows.size() != n)
    throw std::invalid_argument("j_hz must have one row per spin");
  sys.j_hz = Eigen::MatrixXd::Zero(n, n);
  for (size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n)
      throw std::invalid_argument("j_hz must be square");
    for (size_t c = 0; c < n; ++c)
      sys.j_hz(r, c) = rows[r][c].get<double>();
  }
  sys.validate();
  return sys;
}

}  // namespace xysim
