#pragma once

#include <numbers>

// CODATA 2018 values. The SI redefinition makes c, h and e exact.
namespace chainrad::units {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSpeedOfLight = 299792458.0;           // m/s
inline constexpr double kPlanck = 6.62607015e-34;              // J s
inline constexpr double kHbar = kPlanck / (2.0 * kPi);         // J s
inline constexpr double kElementaryCharge = 1.602176634e-19;   // C
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F/m

inline constexpr double kMetersPerAngstrom = 1e-10;
inline constexpr double kJoulesPerEv = kElementaryCharge;
inline constexpr double kCoulombMetersPerEAngstrom = kElementaryCharge * kMetersPerAngstrom;

constexpr double angstrom_to_m(double a) { return a * kMetersPerAngstrom; }
constexpr double m_to_angstrom(double m) { return m / kMetersPerAngstrom; }
constexpr double ev_to_joule(double e) { return e * kJoulesPerEv; }
constexpr double e_angstrom_to_cm(double d) { return d * kCoulombMetersPerEAngstrom; }
constexpr double cm_to_e_angstrom(double d) { return d / kCoulombMetersPerEAngstrom; }
constexpr double deg_to_rad(double d) { return d * kPi / 180.0; }
constexpr double rad_to_deg(double r) { return r * 180.0 / kPi; }

}  // namespace chainrad::units
