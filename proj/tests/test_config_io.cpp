#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "chainrad/config_io.hpp"
#include "chainrad/errors.hpp"
#include "chainrad/units.hpp"

using namespace chainrad;

TEST_CASE("default config round trip") {
    const auto doc = default_config_json();
    const auto c = config_from_json(doc);
    CHECK(c.n_atoms == 2);
    CHECK(c.lattice_const_m == doctest::Approx(1e-7).epsilon(1e-15));
    CHECK(c.transition_energy_ev == 1.0);
    CHECK(c.dipole_moment_cm == doctest::Approx(units::e_angstrom_to_cm(1.0)));
    CHECK(c.polarization_rad == 0.0);
    CHECK_FALSE(c.gamma_override_hz.has_value());

    const auto back = config_from_json(config_to_json(c));
    CHECK(back.n_atoms == c.n_atoms);
    CHECK(back.lattice_const_m == doctest::Approx(c.lattice_const_m).epsilon(1e-15));
    CHECK(back.dipole_moment_cm == doctest::Approx(c.dipole_moment_cm).epsilon(1e-15));
}

TEST_CASE("schema errors") {
    auto doc = default_config_json();
    doc["colour"] = "blue";
    CHECK_THROWS_AS(config_from_json(doc), ConfigError);

    doc = default_config_json();
    doc.erase("transition_energy_ev");
    CHECK_THROWS_AS(config_from_json(doc), ConfigError);

    doc = default_config_json();
    doc["n_atoms"] = 2.5;
    CHECK_THROWS_AS(config_from_json(doc), ConfigError);

    doc = default_config_json();
    doc["n_atoms"] = 0;
    CHECK_THROWS_AS(config_from_json(doc), ConfigError);

    doc = default_config_json();
    doc["lattice_const_angstrom"] = "far";
    CHECK_THROWS_AS(config_from_json(doc), ConfigError);

    CHECK_THROWS_AS(config_from_json(nlohmann::json::array()), ConfigError);
}

TEST_CASE("gamma override may be omitted, null or a number") {
    auto doc = default_config_json();
    doc.erase("gamma_override_hz");
    CHECK_FALSE(config_from_json(doc).gamma_override_hz.has_value());
    doc["gamma_override_hz"] = 1e8;
    CHECK(config_from_json(doc).gamma_override_hz.value() == 1e8);
}

TEST_CASE("key=value overrides") {
    auto doc = default_config_json();
    apply_override(doc, "n_atoms=5");
    apply_override(doc, "polarization_deg=45");
    apply_override(doc, "gamma_override_hz=1e8");
    auto c = config_from_json(doc);
    CHECK(c.n_atoms == 5);
    CHECK(c.polarization_rad == doctest::Approx(units::kPi / 4));
    CHECK(c.gamma_override_hz.value() == 1e8);
    apply_override(doc, "gamma_override_hz=none");
    CHECK_FALSE(config_from_json(doc).gamma_override_hz.has_value());

    CHECK_THROWS_AS(apply_override(doc, "n_atoms"), ConfigError);
    CHECK_THROWS_AS(apply_override(doc, "bogus=1"), ConfigError);
    CHECK_THROWS_AS(apply_override(doc, "n_atoms=abc"), ConfigError);
}

TEST_CASE("config files") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto good = dir / "chainrad_test_good.json";
    const auto bad = dir / "chainrad_test_bad.json";
    {
        std::ofstream(good) << R"({"n_atoms": 4, "lattice_const_angstrom": 500, "transition_energy_ev": 2,
                                   "dipole_e_angstrom": 0.5, "polarization_deg": 90})";
        std::ofstream(bad) << "{ not json";
    }
    const auto c = config_from_json(read_config_file(good));
    CHECK(c.n_atoms == 4);
    CHECK(c.polarization_rad == doctest::Approx(units::kPi / 2));
    CHECK_THROWS_AS(read_config_file(bad), ConfigError);
    CHECK_THROWS_AS(read_config_file(dir / "chainrad_missing_file.json"), ConfigError);
    std::filesystem::remove(good);
    std::filesystem::remove(bad);
}

TEST_CASE("metadata lines") {
    auto doc = default_config_json();
    const auto lines = metadata_lines(config_from_json(doc));
    REQUIRE(lines.size() == 4);
    CHECK(lines[0].rfind("chainrad ", 0) == 0);
    CHECK(lines[1].find("CODATA 2018") != std::string::npos);
    CHECK(lines[2].find("\"n_atoms\":2") != std::string::npos);
    CHECK(lines[3].find("(dipole formula)") != std::string::npos);
    apply_override(doc, "gamma_override_hz=1e8");
    CHECK(metadata_lines(config_from_json(doc))[3].find("(override)") != std::string::npos);
}
