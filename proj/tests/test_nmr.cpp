#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <map>
#include <numbers>

#include "test_support.hpp"
#include "xysim/chain.hpp"
#include "xysim/nmr.hpp"

using namespace xysim;
using test::make_rng;
using test::max_abs_diff;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

SpinSystem lossless_system() {
  SpinSystem sys = SpinSystem::chfbr2();
  sys.t1_s = {kInf, kInf, kInf};
  sys.t2_s = {kInf, kInf, kInf};
  sys.validate();
  return sys;
}

SpinSystem single_spin(double t1, double t2) {
  SpinSystem sys;
  sys.names = {"H"};
  sys.gamma_ratios = {1.0};
  sys.j_hz = Eigen::MatrixXd::Zero(1, 1);
  sys.t1_s = {t1};
  sys.t2_s = {t2};
  sys.validate();
  return sys;
}

}  // namespace

TEST_CASE("spin system defaults and validation") {
  const SpinSystem sys = SpinSystem::chfbr2();
  CHECK(sys.n_qubits() == 3);
  CHECK(sys.j(1, 2) == doctest::Approx(224.5));
  CHECK(sys.j(2, 3) == doctest::Approx(-310.9));
  CHECK(sys.j(1, 3) == doctest::Approx(49.7));
  CHECK(sys.j(3, 1) == sys.j(1, 3));

  SpinSystem broken = sys;
  broken.t2_s[0] = 3.0 * broken.t1_s[0];
  CHECK_THROWS_AS(broken.validate(), std::invalid_argument);

  SpinSystem asym = sys;
  asym.j_hz(0, 1) = 1.0;
  CHECK_THROWS_AS(asym.validate(), std::invalid_argument);
}

TEST_CASE("spin system json round trip") {
  const std::string text = R"({
    "spins": [
      {"name": "H", "gamma_ratio": 1.0,  "t1_s": 6.7, "t2_s": 1.4},
      {"name": "C", "gamma_ratio": 0.25, "t1_s": 1.9, "t2_s": 0.71},
      {"name": "F", "gamma_ratio": 0.94, "t1_s": 4.0, "t2_s": 0.70}
    ],
    "j_hz": [[0.0, 224.5, 49.7], [224.5, 0.0, -310.9], [49.7, -310.9, 0.0]]
  })";
  const SpinSystem sys = SpinSystem::from_json_text(text);
  CHECK(sys.names == SpinSystem::chfbr2().names);
  CHECK((sys.j_hz - SpinSystem::chfbr2().j_hz).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS(SpinSystem::from_json_text("{\"spins\": []}"));
}

TEST_CASE("equilibrium deviation") {
  const Matrix dev = equilibrium_deviation(SpinSystem::chfbr2());
  CHECK(std::abs(dev.trace()) < 1e-14);
  CHECK(dev(0, 0).real() == doctest::Approx(2.19));    // |000>
  CHECK(dev(7, 7).real() == doctest::Approx(-2.19));   // |111>
  CHECK(is_hermitian(dev, 1e-14));
}

TEST_CASE("pseudo-pure state construction") {
  CHECK(max_abs_diff(make_pps("010", 1.0).matrix,
                     projector(basis_state("010"))) < 1e-15);
  CHECK(max_abs_diff(make_pps("000", 0.0).matrix, 0.125 * identity(8)) <
        1e-15);
  CHECK_THROWS_AS(make_pps("000", 1.5), std::invalid_argument);
  CHECK_THROWS_AS(make_pps("000", -0.1), std::invalid_argument);

  // deviation keeps the |label><label| - I/8 direction for every label
  for (int index = 0; index < 8; ++index) {
    const std::string label = {char('0' + ((index >> 2) & 1)),
                               char('0' + ((index >> 1) & 1)),
                               char('0' + (index & 1))};
    for (double eps : {0.1, 0.5, 1.0}) {
      const Matrix deviation = make_pps(label, eps).matrix - 0.125 * identity(8);
      const Matrix expected =
          eps * (projector(basis_state(label)) - 0.125 * identity(8));
      CHECK(max_abs_diff(deviation, expected) < 1e-15);
    }
  }
}

TEST_CASE("pps deviation expands into equal-weight sz products") {
  // (I + z1)(I + z2)(I + z3)/8 = |000><000|, so every sz product string
  // carries the same coefficient eps/8 in the deviation
  const double eps = 0.7;
  const Matrix deviation = make_pps("000", eps).matrix - 0.125 * identity(8);
  for (const PauliValue& v : pauli_set(deviation)) {
    if (v.label == "III") {
      CHECK(std::abs(v.value) < 1e-12);  // traceless
    } else if (v.label.find_first_not_of("IZ") == std::string::npos) {
      // Tr(deviation P) = 8 * (eps/8) for each of the 7 sz strings
      CHECK(v.value == doctest::Approx(eps));
    } else {
      CHECK(std::abs(v.value) < 1e-12);
    }
  }
}

TEST_CASE("other pps labels come from pi_x conjugation of |000>") {
  const double eps = 0.6;
  const Matrix base = make_pps("000", eps).matrix;
  const Matrix flip2 = embed(pauli_x(), 2, 3);
  CHECK(max_abs_diff(make_pps("010", eps).matrix, flip2 * base * flip2) <
        1e-15);
}

TEST_CASE("zz hamiltonian") {
  const SpinSystem sys = SpinSystem::chfbr2();
  const Matrix h = zz_hamiltonian(sys, nearest_neighbor_pairs(3));
  // diagonal with |000> entry (pi/2)(J12 + J23)
  CHECK((h - Matrix(h.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0);
  CHECK(h(0, 0).real() == doctest::Approx(kPi / 2 * (224.5 - 310.9)));

  const Matrix full = zz_hamiltonian_full(sys);
  CHECK(full(0, 0).real() ==
        doctest::Approx(kPi / 2 * (224.5 - 310.9 + 49.7)));

  Matrix total_z = Matrix::Zero(8, 8);
  for (int q = 1; q <= 3; ++q) total_z += embed(pauli_z(), q, 3);
  CHECK((h * total_z - total_z * h).cwiseAbs().maxCoeff() == 0.0);

  SpinSystem uncoupled = sys;
  uncoupled.j_hz(0, 1) = uncoupled.j_hz(1, 0) = 0.0;
  CHECK_THROWS_AS(zz_hamiltonian(uncoupled, {{1, 2}}), std::invalid_argument);
}

TEST_CASE("single-qubit kraus sets are complete") {
  for (double t : {0.0, 1e-4, 0.01, 0.5, 3.0}) {
    const auto kraus = single_qubit_decoherence_kraus(t, 6.7, 1.4);
    Matrix sum = Matrix::Zero(2, 2);
    for (const Matrix& k : kraus) sum += k.adjoint() * k;
    CHECK(max_abs_diff(sum, identity(2)) < 1e-12);
  }
}

TEST_CASE("decoherence channel limits") {
  auto rng = make_rng();
  const Matrix rho = test::random_density(rng, 8);
  CHECK(max_abs_diff(apply_decoherence(rho, 0.0, SpinSystem::chfbr2()), rho) <
        1e-14);
  CHECK(max_abs_diff(apply_decoherence(rho, 0.4, lossless_system()), rho) <
        1e-14);
  CHECK_THROWS_AS(apply_decoherence(rho, -1.0, SpinSystem::chfbr2()),
                  std::invalid_argument);
}

TEST_CASE("single-qubit relaxation follows the closed form") {
  const double t1 = 0.8, t2 = 0.5, t = 0.21;
  const SpinSystem sys = single_spin(t1, t2);
  Matrix rho(2, 2);
  rho << 0.7, Complex(0.3, -0.2), Complex(0.3, 0.2), 0.3;
  const Matrix out = apply_decoherence(rho, t, sys);
  // populations relax toward 1/2 at rate 1/T1
  CHECK(out(0, 0).real() ==
        doctest::Approx(0.5 + 0.2 * std::exp(-t / t1)).epsilon(1e-12));
  // coherences decay by exp(-t/T2) in total
  CHECK(std::abs(out(0, 1)) ==
        doctest::Approx(std::abs(rho(0, 1)) * std::exp(-t / t2))
            .epsilon(1e-12));
}

TEST_CASE("decoherence channel is trace and positivity preserving") {
  auto rng = make_rng();
  const SpinSystem sys = SpinSystem::chfbr2();
  for (int i = 0; i < 100; ++i) {
    const Matrix rho = test::random_density(rng, 8);
    const Matrix out = apply_decoherence(rho, 0.05 * (i + 1), sys);
    CHECK(std::abs(out.trace() - Complex(1.0)) < 1e-12);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(out, Eigen::EigenvaluesOnly);
    CHECK(solver.eigenvalues().minCoeff() >= -1e-10);
  }
}

TEST_CASE("decoherence channel composes as a semigroup") {
  auto rng = make_rng();
  const SpinSystem sys = SpinSystem::chfbr2();
  for (int i = 0; i < 20; ++i) {
    const Matrix rho = test::random_density(rng, 8);
    const Matrix split =
        apply_decoherence(apply_decoherence(rho, 0.07, sys), 0.11, sys);
    const Matrix joint = apply_decoherence(rho, 0.18, sys);
    CHECK(max_abs_diff(split, joint) < 1e-10);
  }
}

TEST_CASE("schedule simulation without noise tracks the unitary") {
  const SpinSystem sys = SpinSystem::chfbr2();
  const Matrix rho0 = make_pps("010", 1.0).matrix;
  CHECK(max_abs_diff(simulate_schedule(rho0, Schedule{}, sys), rho0) == 0.0);

  const Schedule bell = protocol_schedule(Protocol::Bell010, sys);
  const Matrix out = simulate_schedule(rho0, bell, sys);
  const Matrix ideal = projector(bell_target_010());
  CHECK(fidelity(ideal, out) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("noisy bell schedule attenuates by roughly the reported amount") {
  const SpinSystem sys = SpinSystem::chfbr2();
  const Matrix rho0 = make_pps("010", 1.0).matrix;
  const Schedule bell = protocol_schedule(Protocol::Bell010, sys);
  NoiseParams noise;
  noise.enabled = true;
  const Matrix noisy = simulate_schedule(rho0, bell, sys, noise);
  const double c = attenuated_correlation(projector(bell_target_010()), noisy);
  CHECK(c > 0.89);
  CHECK(c < 0.99);
}

TEST_CASE("noise trotterization converges") {
  const SpinSystem sys = SpinSystem::chfbr2();
  const double coarse = decoherence_estimate(Protocol::Bell010, sys, 16);
  const double fine = decoherence_estimate(Protocol::Bell010, sys, 64);
  CHECK(std::abs(coarse - fine) < 1e-3);
}

TEST_CASE("fidelity") {
  auto rng = make_rng();
  const Matrix rho = test::random_density(rng, 8);
  CHECK(fidelity(rho, rho) == doctest::Approx(1.0));

  CHECK(fidelity(projector(basis_state("000")),
                 projector(basis_state("001"))) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(fidelity(projector(basis_state("0")), 0.5 * identity(2)) ==
        doctest::Approx(1.0 / std::sqrt(2.0)));

  const Matrix a = test::random_density(rng, 8);
  const Matrix b = test::random_density(rng, 8);
  CHECK(fidelity(a, b) == doctest::Approx(fidelity(b, a)));

  CHECK_THROWS_AS(fidelity(Matrix::Zero(2, 2), identity(2)),
                  std::invalid_argument);
}

TEST_CASE("attenuated correlation") {
  const Matrix pure = projector(ghz_target());
  CHECK(attenuated_correlation(pure, pure) == doctest::Approx(1.0));

  for (double p : {0.1, 0.4, 0.9}) {
    const Matrix mixed = (1.0 - p) * pure + p * 0.125 * identity(8);
    CHECK(attenuated_correlation(pure, mixed) ==
          doctest::Approx(1.0 - 7.0 * p / 8.0).epsilon(1e-12));
  }

  CHECK(attenuated_correlation(pure, 0.125 * identity(8)) ==
        doctest::Approx(0.125));

  // the argument order matters, unlike fidelity
  const Matrix mixed = 0.5 * pure + 0.5 * 0.125 * identity(8);
  const double forward = attenuated_correlation(pure, mixed);
  const double backward = attenuated_correlation(mixed, pure);
  CHECK(std::abs(forward - backward) > 1e-3);

  CHECK_THROWS_AS(attenuated_correlation(Matrix::Zero(8, 8), pure),
                  std::invalid_argument);
}

TEST_CASE("pauli set of reference states") {
  const auto w_values = pauli_set(projector(w_target()));
  REQUIRE(w_values.size() == 64);
  CHECK(w_values.front().label == "III");
  CHECK(w_values.front().value == doctest::Approx(1.0));

  const std::map<std::string, double> caption{
      {"ZII", -1.0 / 3}, {"IZI", -1.0 / 3}, {"IIZ", -1.0 / 3},
      {"ZZI", -1.0 / 3}, {"IZZ", -1.0 / 3}, {"ZIZ", -1.0 / 3},
      {"XXI", 2.0 / 3},  {"YYI", 2.0 / 3},  {"IXX", 2.0 / 3},
      {"IYY", 2.0 / 3},  {"XIX", 2.0 / 3},  {"YIY", 2.0 / 3},
      {"XXZ", -2.0 / 3}, {"YYZ", -2.0 / 3}, {"ZXX", -2.0 / 3},
      {"ZYY", -2.0 / 3}, {"XZX", -2.0 / 3}, {"YZY", -2.0 / 3},
      {"ZZZ", 1.0},      {"III", 1.0}};
  for (const PauliValue& v : w_values) {
    const auto it = caption.find(v.label);
    const double expected = (it == caption.end()) ? 0.0 : it->second;
    CHECK(std::abs(v.value - expected) < 1e-10);
  }

  for (const PauliValue& v : pauli_set(projector(basis_state("000")))) {
    const bool z_only = v.label.find_first_not_of("IZ") == std::string::npos;
    CHECK(std::abs(v.value - (z_only ? 1.0 : 0.0)) < 1e-12);
  }

  for (const PauliValue& v : pauli_set(0.125 * identity(8)))
    CHECK(std::abs(v.value - (v.label == "III" ? 1.0 : 0.0)) < 1e-14);
}

TEST_CASE("pauli set reconstruction round trips") {
  auto rng = make_rng();
  for (const Matrix& rho :
       {projector(ghz_target()), projector(w_target()),
        test::random_density(rng, 8)}) {
    CHECK(max_abs_diff(reconstruct_from_pauli_set(pauli_set(rho)), rho) <
          1e-12);
  }
  for (const PauliValue& v : pauli_set(test::random_density(rng, 8))) {
    CHECK(v.value >= -1.0 - 1e-12);
    CHECK(v.value <= 1.0 + 1e-12);
  }

  std::vector<PauliValue> flat(64);
  int i = 0;
  for (const PauliValue& v : pauli_set(0.125 * identity(8)))
    flat[i++] = {v.label, v.label == "III" ? 1.0 : 0.0};
  CHECK(max_abs_diff(reconstruct_from_pauli_set(flat), 0.125 * identity(8)) <
        1e-14);

  flat.pop_back();
  CHECK_THROWS_AS(reconstruct_from_pauli_set(flat), std::invalid_argument);
  flat.push_back(flat.front());  // duplicate instead of the missing label
  CHECK_THROWS_AS(reconstruct_from_pauli_set(flat), std::invalid_argument);
}

TEST_CASE("end-qubit correlation sweep") {
  const PseudoPureState pps = make_pps("010", 1.0);
  const std::vector<double> grid{0.0, kPi / 4, kPi / 2, 3 * kPi / 4, kPi};
  const auto sweep = correlation_sweep(pps, grid);
  REQUIRE(sweep.size() == 5);
  CHECK(std::abs(sweep[0].second) < 1e-12);
  CHECK(sweep[1].second == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(sweep[2].second) < 1e-12);
  CHECK(sweep[3].second == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(sweep[4].second) < 1e-12);

  // linear in the pps purity fraction
  const auto half = correlation_sweep(make_pps("010", 0.5), grid);
  CHECK(half[1].second == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("protocol assembly") {
  CHECK(protocol_from_name("bell-010") == Protocol::Bell010);
  CHECK(protocol_from_name("ghz") == Protocol::Ghz);
  CHECK_THROWS_AS(protocol_from_name("bell"), std::invalid_argument);

  // gate-level pipelines reproduce the ideal preparations
  const struct {
    Protocol protocol;
    Vector target;
  } cases[] = {{Protocol::Bell010, bell_target_010()},
               {Protocol::Bell101, bell_target_101()},
               {Protocol::W, w_target()},
               {Protocol::Ghz, ghz_target()}};
  for (const auto& c : cases) {
    const Matrix u = sequence_unitary(protocol_gate_sequence(c.protocol), 3);
    const Vector out =
        u * basis_state(protocol_initial_label(c.protocol));
    CHECK(std::abs(out.dot(c.target)) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("decoherence estimate") {
  CHECK(decoherence_estimate(Protocol::Bell010, lossless_system()) ==
        doctest::Approx(1.0).epsilon(1e-10));

  const double c = decoherence_estimate(Protocol::Bell010,
                                        SpinSystem::chfbr2());
  CHECK(c > 0.89);
  CHECK(c < 0.99);

  // longer exposure, lower correlation
  const SpinSystem sys = SpinSystem::chfbr2();
  const Matrix rho0 = make_pps("010", 1.0).matrix;
  NoiseParams noise;
  noise.enabled = true;
  const Schedule schedule = protocol_schedule(Protocol::Bell010, sys);
  const Schedule doubled = scale_delays(schedule, 2.0);
  const double base = attenuated_correlation(
      simulate_schedule(rho0, schedule, sys),
      simulate_schedule(rho0, schedule, sys, noise));
  const double slower = attenuated_correlation(
      simulate_schedule(rho0, doubled, sys),
      simulate_schedule(rho0, doubled, sys, noise));
  CHECK(slower < base);
}
