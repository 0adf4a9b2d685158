#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "softpulse/spin_system.hpp"

namespace softpulse {

// User-facing molecule parameters, cyclic frequency (Hz). Converted to
// angular units (x 2 pi) at the boundary.
struct MoleculeConfig {
  std::string label;
  double j12_hz = 0.0;
  double j23_hz = 0.0;
  double delta12_hz = 0.0;
  double delta13_hz = 0.0;

  bool operator==(const MoleculeConfig&) const = default;
};

MoleculeConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const MoleculeConfig& c);

// Reads and validates a JSON config file. Unknown keys are rejected.
MoleculeConfig parse_config(const std::filesystem::path& path);

SpinChainParams to_params(const MoleculeConfig& c);

}  // namespace softpulse
