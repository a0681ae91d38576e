#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "chainrad/scales.hpp"

namespace chainrad {

/// The configuration file schema, in lab units:
///   n_atoms, lattice_const_angstrom, transition_energy_ev, dipole_e_angstrom,
///   polarization_deg, gamma_override_hz (optional, may be null).
nlohmann::json default_config_json();

/// Parses and validates; throws ConfigError on missing/unknown keys or bad values.
ChainConfig config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const ChainConfig& config);

/// Reads a JSON config file (throws ConfigError if unreadable or malformed).
nlohmann::json read_config_file(const std::filesystem::path& path);

/// Applies a "key=value" override in place.
void apply_override(nlohmann::json& doc, std::string_view assignment);

/// '#'-comment lines describing the physical constants, config and scales.
std::vector<std::string> metadata_lines(const ChainConfig& config);

}  // namespace chainrad
