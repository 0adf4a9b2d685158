#include "softpulse/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace softpulse {

MoleculeConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("config: expected a JSON object");
  static const std::set<std::string> known = {
      "label", "j12_hz", "j23_hz", "delta12_hz", "delta13_hz"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw ParseError("config: unknown key '" + key + "'");
  for (const char* key : {"j12_hz", "j23_hz", "delta12_hz", "delta13_hz"})
    if (!j.contains(key))
      throw ValidationError(std::string("config: missing key '") + key + "'");

  MoleculeConfig c;
  c.label = j.value("label", std::string{});
  try {
    c.j12_hz = j.at("j12_hz").get<double>();
    c.j23_hz = j.at("j23_hz").get<double>();
    c.delta12_hz = j.at("delta12_hz").get<double>();
    c.delta13_hz = j.at("delta13_hz").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (!(c.j12_hz > 0.0)) throw ValidationError("config: j12_hz must be > 0");
  if (!(c.j23_hz > 0.0)) throw ValidationError("config: j23_hz must be > 0");
  if (!std::isfinite(c.delta12_hz) || !std::isfinite(c.delta13_hz))
    throw ValidationError("config: detunings must be finite");
  return c;
}

nlohmann::json config_to_json(const MoleculeConfig& c) {
  return {{"label", c.label},
          {"j12_hz", c.j12_hz},
          {"j23_hz", c.j23_hz},
          {"delta12_hz", c.delta12_hz},
          {"delta13_hz", c.delta13_hz}};
}

MoleculeConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("config: cannot open " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("config: " + path.string() + ": " + e.what());
  }
  return config_from_json(j);
}

SpinChainParams to_params(const MoleculeConfig& c) {
  constexpr double two_pi = 2.0 * M_PI;
  return {two_pi * c.j12_hz, two_pi * c.j23_hz, two_pi * c.delta12_hz,
          two_pi * c.delta13_hz, c.label};
}

}  // namespace softpulse
