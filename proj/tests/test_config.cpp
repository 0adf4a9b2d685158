#include <doctest.h>

#include "softpulse/config.hpp"

using namespace softpulse;

#ifndef SOFTPULSE_DATA_DIR
#define SOFTPULSE_DATA_DIR "."
#endif

TEST_CASE("bundled alanine config parses") {
  const MoleculeConfig c =
      parse_config(std::filesystem::path(SOFTPULSE_DATA_DIR) / "alanine.json");
  CHECK(c.j12_hz == 34.8);
  CHECK(c.j23_hz == 53.8);
  CHECK(c.delta12_hz == -4320.0);
  CHECK(c.delta13_hz == -20100.0);

  const SpinChainParams p = to_params(c);
  CHECK(p.j12 == doctest::Approx(2.0 * M_PI * 34.8).epsilon(1e-14));
  CHECK(p.delta13 == doctest::Approx(2.0 * M_PI * -20100.0).epsilon(1e-14));
}

TEST_CASE("config validation") {
  nlohmann::json good = {{"label", "x"},
                         {"j12_hz", 34.8},
                         {"j23_hz", 53.8},
                         {"delta12_hz", -4320.0},
                         {"delta13_hz", -20100.0}};

  nlohmann::json missing = good;
  missing.erase("j23_hz");
  CHECK_THROWS_AS(config_from_json(missing), ValidationError);

  nlohmann::json negative = good;
  negative["j12_hz"] = -1.0;
  CHECK_THROWS_AS(config_from_json(negative), ValidationError);

  nlohmann::json unknown = good;
  unknown["j13_hz"] = 1.0;
  CHECK_THROWS_AS(config_from_json(unknown), ParseError);

  CHECK_THROWS_AS(parse_config("/nonexistent/file.json"), ParseError);
}

TEST_CASE("config round trip") {
  const MoleculeConfig c{"probe", 10.0, 20.0, -100.0, 250.0};
  CHECK(config_from_json(config_to_json(c)) == c);
}
