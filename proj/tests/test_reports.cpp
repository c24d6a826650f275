#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <sstream>

#include "test_support.hpp"
#include "xysim/reports.hpp"

using namespace xysim;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("phi grid generation") {
  CHECK(PhiGrid{}.points().size() == 629);
  CHECK(PhiGrid{}.points().front() == 0.0);
  CHECK(PhiGrid{}.points().back() == doctest::Approx(kPi));

  const PhiGrid coarse{0.0, 1.0, 0.25};
  CHECK(coarse.points() == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});

  const PhiGrid bad{0.0, 1.0, 0.0};
  CHECK_THROWS_AS(bad.points(), std::invalid_argument);
}

TEST_CASE("significant-digit formatting is stable") {
  CHECK(format_sig(1.0) == "1");
  CHECK(format_sig(0.0) == "0");
  CHECK(format_sig(-0.0) == "0");
  CHECK(format_sig(2.0 / 3.0) == "0.666666666667");
  CHECK(round_sig(2.0 / 3.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-11));
}

TEST_CASE("dynamics csv shape and the quiet ferromagnet") {
  const std::string csv = dynamics_csv("000", {0.0, 0.5, 1.0});
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "phi,c12,c13,c23,c1_23,c123");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.substr(line.find(',')) == ",0,0,0,0,0");
  }
  CHECK(rows == 3);

  CHECK_THROWS_AS(dynamics_csv("02", {0.0}), std::invalid_argument);
}

TEST_CASE("prepare reports across pipeline modes") {
  const SpinSystem sys = SpinSystem::chfbr2();

  const auto ideal = prepare_report(Protocol::Bell010, PipelineMode::Ideal, sys);
  CHECK(ideal.at("fidelity_vs_ideal").get<double>() == doctest::Approx(1.0));
  CHECK(ideal.at("attenuated_correlation_vs_ideal").get<double>() ==
        doctest::Approx(1.0));
  CHECK(ideal.at("entanglement").at("c13").get<double>() ==
        doctest::Approx(1.0));
  CHECK(ideal.at("entanglement").at("c123").get<double>() ==
        doctest::Approx(0.0));
  CHECK_FALSE(ideal.contains("total_duration_s"));

  const auto compiled =
      prepare_report(Protocol::W, PipelineMode::Compiled, sys);
  CHECK(compiled.at("fidelity_vs_ideal").get<double>() >= 1.0 - 1e-8);

  const auto noisy =
      prepare_report(Protocol::Ghz, PipelineMode::ScheduleNoise, sys, 16);
  const double c =
      noisy.at("attenuated_correlation_vs_ideal").get<double>();
  CHECK(c > 0.8);
  CHECK(c < 1.0);
  CHECK(noisy.at("total_duration_s").get<double>() > 0.0);
  CHECK(noisy.at("entanglement").at("c123").is_null());  // mixed state

  // the embedded matrix reads back as the reported state
  const Matrix rho = density_from_report(noisy);
  CHECK(std::abs(rho.trace().real() - 1.0) < 1e-9);
  CHECK(is_hermitian(rho, 1e-9));
}

TEST_CASE("verification suite passes and the negative control fails") {
  VerifyConfig config;
  config.phi_samples = 5;
  const SpinSystem sys = SpinSystem::chfbr2();
  const VerifyReport good = run_verify(config, sys);
  CHECK(good.all_pass());
  CHECK(good.checks.size() == 6);

  config.inject_error = true;
  const VerifyReport bad = run_verify(config, sys);
  CHECK_FALSE(bad.all_pass());
  for (const VerifyCheck& check : bad.checks)
    if (!check.pass) CHECK(check.name == "xy-compiler");

  config.phi_samples = 0;
  CHECK_THROWS_AS(run_verify(config, sys), std::invalid_argument);
}

TEST_CASE("correlation csv with a noisy column") {
  const SpinSystem sys = SpinSystem::chfbr2();
  const std::string csv =
      correlation_csv("010", {kPi / 4}, true, sys, 16);
  std::istringstream lines(csv);
  std::string header, row;
  std::getline(lines, header);
  CHECK(header == "phi,xx_corr,xx_corr_noisy");
  std::getline(lines, row);
  const auto second_comma = row.find(',', row.find(',') + 1);
  const double ideal = std::stod(row.substr(row.find(',') + 1));
  const double noisy = std::stod(row.substr(second_comma + 1));
  CHECK(ideal == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(noisy > 0.8);
  CHECK(noisy < ideal);
}
