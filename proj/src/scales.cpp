#include "chainrad/scales.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "chainrad/errors.hpp"
#include "chainrad/units.hpp"

namespace chainrad {

using namespace units;

double fold_polarization(double phi_rad) {
    const double c = std::abs(std::cos(phi_rad));
    return std::acos(std::min(c, 1.0));
}

ChainConfig ChainConfig::make(int n_atoms, double lattice_const_angstrom,
                              double transition_energy_ev, double dipole_e_angstrom,
                              double polarization_deg, std::optional<double> gamma_override_hz) {
    ChainConfig c;
    c.n_atoms = n_atoms;
    c.lattice_const_m = angstrom_to_m(lattice_const_angstrom);
    c.transition_energy_ev = transition_energy_ev;
    c.dipole_moment_cm = e_angstrom_to_cm(dipole_e_angstrom);
    c.polarization_rad = fold_polarization(deg_to_rad(polarization_deg));
    c.gamma_override_hz = gamma_override_hz;
    c.validate();
    return c;
}

void ChainConfig::validate() const {
    std::ostringstream err;
    if (n_atoms < 1) err << "n_atoms must be >= 1 (got " << n_atoms << "); ";
    if (!(lattice_const_m > 0.0) || !std::isfinite(lattice_const_m))
        err << "lattice constant must be positive; ";
    if (!(transition_energy_ev > 0.0) || !std::isfinite(transition_energy_ev))
        err << "transition energy must be positive; ";
    if (!(dipole_moment_cm > 0.0) || !std::isfinite(dipole_moment_cm))
        err << "dipole moment must be positive; ";
    if (!(polarization_rad >= 0.0 && polarization_rad <= kPi / 2.0))
        err << "polarization angle must lie in [0, pi/2]; ";
    if (gamma_override_hz && !(*gamma_override_hz > 0.0 && std::isfinite(*gamma_override_hz)))
        err << "gamma override must be positive; ";
    const auto msg = err.str();
    if (!msg.empty()) throw ConfigError(msg.substr(0, msg.size() - 2));
}

double single_atom_decay_rate(double omega_a, double dipole_moment_cm) {
    const double c3 = kSpeedOfLight * kSpeedOfLight * kSpeedOfLight;
    return omega_a * omega_a * omega_a * dipole_moment_cm * dipole_moment_cm /
           (3.0 * kPi * kVacuumPermittivity * kHbar * c3);
}

AtomicScales derive_scales(const ChainConfig& config) {
    config.validate();
    const double energy = ev_to_joule(config.transition_energy_ev);
    AtomicScales s;
    s.omega_a = energy / kHbar;
    s.q_a = energy / (kHbar * kSpeedOfLight);
    s.lambda_a = kPlanck * kSpeedOfLight / energy;
    if (config.gamma_override_hz) {
        s.gamma_a = *config.gamma_override_hz;
        s.gamma_overridden = true;
    } else {
        s.gamma_a = single_atom_decay_rate(s.omega_a, config.dipole_moment_cm);
    }
    return s;
}

double dimensionless_separation(const ChainConfig& config) {
    return derive_scales(config).q_a * config.lattice_const_m;
}

}  // namespace chainrad
