#include "chainrad/config_io.hpp"

#include <array>
#include <charconv>
#include <fstream>

#include "chainrad/errors.hpp"
#include "chainrad/sweep_table.hpp"
#include "chainrad/units.hpp"

namespace chainrad {

namespace {

constexpr std::array<std::string_view, 5> kRequiredKeys = {
    "n_atoms", "lattice_const_angstrom", "transition_energy_ev", "dipole_e_angstrom",
    "polarization_deg"};
constexpr std::string_view kOverrideKey = "gamma_override_hz";

bool known_key(std::string_view key) {
    if (key == kOverrideKey) return true;
    for (auto k : kRequiredKeys)
        if (k == key) return true;
    return false;
}

double number_at(const nlohmann::json& doc, std::string_view key) {
    const auto& v = doc.at(std::string(key));
    if (!v.is_number()) throw ConfigError("config key '" + std::string(key) + "' must be a number");
    return v.get<double>();
}

}  // namespace

nlohmann::json default_config_json() {
    return {{"n_atoms", 2},
            {"lattice_const_angstrom", 1000.0},
            {"transition_energy_ev", 1.0},
            {"dipole_e_angstrom", 1.0},
            {"polarization_deg", 0.0},
            {"gamma_override_hz", nullptr}};
}

ChainConfig config_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto& [key, value] : doc.items())
        if (!known_key(key)) throw ConfigError("unknown config key '" + key + "'");
    for (auto k : kRequiredKeys)
        if (!doc.contains(std::string(k)))
            throw ConfigError("missing config key '" + std::string(k) + "'");

    const double n = number_at(doc, "n_atoms");
    if (n != static_cast<double>(static_cast<int>(n)))
        throw ConfigError("n_atoms must be an integer");

    std::optional<double> gamma;
    if (doc.contains(std::string(kOverrideKey)) && !doc.at(std::string(kOverrideKey)).is_null())
        gamma = number_at(doc, kOverrideKey);

    return ChainConfig::make(static_cast<int>(n), number_at(doc, "lattice_const_angstrom"),
                             number_at(doc, "transition_energy_ev"),
                             number_at(doc, "dipole_e_angstrom"), number_at(doc, "polarization_deg"),
                             gamma);
}

nlohmann::json config_to_json(const ChainConfig& c) {
    nlohmann::json doc = {
        {"n_atoms", c.n_atoms},
        {"lattice_const_angstrom", units::m_to_angstrom(c.lattice_const_m)},
        {"transition_energy_ev", c.transition_energy_ev},
        {"dipole_e_angstrom", units::cm_to_e_angstrom(c.dipole_moment_cm)},
        {"polarization_deg", units::rad_to_deg(c.polarization_rad)},
        {"gamma_override_hz", nullptr}};
    if (c.gamma_override_hz) doc["gamma_override_hz"] = *c.gamma_override_hz;
    return doc;
}

nlohmann::json read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("malformed config file " + path.string() + ": " + e.what());
    }
}

void apply_override(nlohmann::json& doc, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos || eq == 0)
        throw ConfigError("override must look like key=value (got '" + std::string(assignment) + "')");
    const std::string key(assignment.substr(0, eq));
    const std::string_view text = assignment.substr(eq + 1);
    if (!known_key(key)) throw ConfigError("unknown config key '" + key + "'");
    if (key == kOverrideKey && (text == "none" || text == "null")) {
        doc[key] = nullptr;
        return;
    }
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw ConfigError("override value for '" + key + "' is not a number: '" + std::string(text) + "'");
    doc[key] = value;
}

std::vector<std::string> metadata_lines(const ChainConfig& config) {
    const auto s = derive_scales(config);
    std::vector<std::string> lines;
    lines.push_back(std::string("chainrad ") + CHAINRAD_VERSION);
    lines.push_back("constants: c=" + format_number(units::kSpeedOfLight) +
                    " h=" + format_number(units::kPlanck) +
                    " e=" + format_number(units::kElementaryCharge) +
                    " eps0=" + format_number(units::kVacuumPermittivity) + " (CODATA 2018)");
    lines.push_back("config: " + config_to_json(config).dump());
    lines.push_back("scales: omega_a=" + format_number(s.omega_a) + " q_a=" + format_number(s.q_a) +
                    " lambda_a=" + format_number(s.lambda_a) + " gamma_a=" + format_number(s.gamma_a) +
                    (s.gamma_overridden ? " (override)" : " (dipole formula)"));
    return lines;
}

}  // namespace chainrad
