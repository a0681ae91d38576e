#include "chainrad/emission.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "chainrad/errors.hpp"
#include "chainrad/units.hpp"

namespace chainrad {

using units::kPi;
using units::kSpeedOfLight;

double EmissionGeometry::max_retardation() const {
    return retard_n.empty() ? 0.0 : *std::max_element(retard_n.begin(), retard_n.end());
}

double EmissionGeometry::path_difference(std::size_t i, std::size_t j) const {
    // d_i^2 - d_j^2 = R_i^2 - R_j^2 exactly, so no sqrt(x^2 + R^2) - x cancellation.
    const double num = (atom_z[i] - atom_z[j]) * (atom_z[i] + atom_z[j]);
    return num / (dist_n[i] + dist_n[j]);
}

EmissionGeometry build_geometry(int n_atoms, double lattice_const_m, double polarization,
                                double obs_x) {
    if (!(obs_x > 0.0) || !std::isfinite(obs_x))
        throw DomainError("observation distance must be positive");
    if (!(lattice_const_m >= 0.0) || !std::isfinite(lattice_const_m))
        throw DomainError("lattice constant must be non-negative");
    if (n_atoms < 1) throw DomainError("need at least one atom");

    EmissionGeometry g;
    g.obs_x = obs_x;
    g.polarization = polarization;
    for (int n = 0; n < n_atoms; ++n) {
        const double r = static_cast<double>(n) * lattice_const_m;
        const double d = std::sqrt(obs_x * obs_x + r * r);
        const double alpha = r == 0.0 ? kPi / 2.0 : std::atan(obs_x / r);
        g.atom_z.push_back(r);
        g.dist_n.push_back(d);
        g.retard_n.push_back(d / kSpeedOfLight);
        g.phi_n.push_back(kPi - polarization - alpha);
        g.unit_n.push_back({obs_x / d, 0.0, -r / d});
    }
    return g;
}

EmissionGeometry build_geometry(const ChainConfig& config, double obs_x) {
    auto g = build_geometry(config.n_atoms, config.lattice_const_m, config.polarization_rad, obs_x);
    const auto scales = derive_scales(config);
    if (obs_x < 10.0 * scales.lambda_a) {
        std::ostringstream os;
        os << "observation point x = " << obs_x << " m is not in the far zone (< 10 lambda_A = "
           << 10.0 * scales.lambda_a << " m)";
        g.advisories.push_back(os.str());
    }
    return g;
}

double reference_intensity(double dipole_moment_cm, double omega_a, double obs_x) {
    const double c3 = kSpeedOfLight * kSpeedOfLight * kSpeedOfLight;
    const double w2 = omega_a * omega_a;
    return dipole_moment_cm * dipole_moment_cm * w2 * w2 /
           (16.0 * kPi * kPi * units::kVacuumPermittivity * c3 * obs_x * obs_x);
}

namespace {

void check_causality(const EmissionGeometry& geom, double t) {
    const double latest = geom.max_retardation();
    if (t < latest) {
        std::ostringstream os;
        os.precision(17);
        os << "observation time t = " << t << " s precedes the retarded time " << latest
           << " s of the farthest atom";
        throw CausalityError(os.str());
    }
}

void check_size(const SignState& state, const EmissionGeometry& geom) {
    if (state.size() != geom.size())
        throw DomainError("state has " + std::to_string(state.size()) + " atoms but geometry has " +
                          std::to_string(geom.size()));
}

}  // namespace

std::vector<double> atom_intensities(const SignState& state, const EmissionGeometry& geom,
                                     const AtomicScales& scales, double t) {
    check_size(state, geom);
    check_causality(geom, t);
    const double x2 = geom.obs_x * geom.obs_x;
    const double rho = 1.0 / static_cast<double>(state.size());
    std::vector<double> out;
    for (std::size_t i = 0; i < geom.size(); ++i) {
        const double s = std::sin(geom.phi_n[i]);
        const double d = geom.dist_n[i];
        out.push_back(0.5 * x2 * s * s / (d * d) * rho *
                      std::exp(-scales.gamma_a * (t - geom.retard_n[i])));
    }
    return out;
}

double total_intensity(const SignState& state, const EmissionGeometry& geom,
                       const AtomicScales& scales, double t) {
    check_size(state, geom);
    check_causality(geom, t);
    const std::size_t n = geom.size();
    const auto corr = pair_correlations(state);

    std::vector<double> amp(n);  // sin(phi_i) / d_i
    for (std::size_t i = 0; i < n; ++i) amp[i] = std::sin(geom.phi_n[i]) / geom.dist_n[i];

    double diag = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        diag += amp[i] * amp[i] * corr(i, i) * std::exp(-scales.gamma_a * (t - geom.retard_n[i]));

    // G_ij + G_ji = 2 Re G_ij for the real, symmetric initial correlations.
    double cross = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& ui = geom.unit_n[i];
            const auto& uj = geom.unit_n[j];
            const double dot = ui[0] * uj[0] + ui[1] * uj[1] + ui[2] * uj[2];
            const double phase = scales.omega_a * (geom.path_difference(i, j) / kSpeedOfLight);
            const double decay =
                std::exp(-scales.gamma_a * (t - 0.5 * (geom.retard_n[i] + geom.retard_n[j])));
            cross += 2.0 * amp[i] * amp[j] * dot * corr(i, j) * std::cos(phase) * decay;
        }
    }
    return 0.5 * geom.obs_x * geom.obs_x * (diag + cross);
}

double two_atom_intensity(PairState which, double a, double phi, double x, double t,
                          const AtomicScales& scales) {
    if (!(x > 0.0)) throw DomainError("observation distance must be positive");
    if (!(a >= 0.0)) throw DomainError("lattice constant must be non-negative");
    const double c = kSpeedOfLight;
    const double g = scales.gamma_a;
    const double d2 = std::sqrt(x * x + a * a);
    if (t < d2 / c) {
        std::ostringstream os;
        os.precision(17);
        os << "observation time t = " << t << " s precedes the retarded time " << d2 / c
           << " s of the second atom";
        throw CausalityError(os.str());
    }
    const double alpha = a == 0.0 ? kPi / 2.0 : std::atan(x / a);
    const double s1 = std::sin(kPi / 2.0 - phi);
    const double s2 = std::sin(kPi - phi - alpha);
    const double x_minus_d2 = -(a * a) / (x + d2);
    const double w = x * x / (x * x + a * a);
    const double sign = which == PairState::symmetric ? 1.0 : -1.0;

    const double brace = s1 * s1 * std::exp(-g * (t - x / c)) +
                         w * s2 * s2 * std::exp(-g * (t - d2 / c)) +
                         sign * w * s1 * s2 * 2.0 * std::cos(scales.omega_a * (x_minus_d2 / c)) *
                             std::exp(-g * (t - (x + d2) / (2.0 * c)));
    return brace / 4.0;
}

double two_atom_asymptotic(PairState which, double a, double phi, double x, double t,
                           const AtomicScales& scales) {
    if (!(x > 0.0)) throw DomainError("observation distance must be positive");
    const double c = kSpeedOfLight;
    const double g = scales.gamma_a;
    const double shift = a * a / (2.0 * c * x);
    const double sign = which == PairState::symmetric ? 1.0 : -1.0;
    const double cphi = std::cos(phi);
    const double brace = 1.0 + std::exp(g * shift) +
                         sign * 2.0 * std::cos(scales.omega_a * shift) * std::exp(g * shift / 2.0);
    return 0.25 * std::exp(-g * (t - x / c)) * cphi * cphi * brace;
}

double causal_lattice_limit(int n_atoms, double obs_x, double t) {
    const double reach = kSpeedOfLight * t;
    if (reach < obs_x) return -1.0;
    const double span = std::sqrt((reach - obs_x) * (reach + obs_x));
    return n_atoms > 1 ? span / static_cast<double>(n_atoms - 1)
                       : std::numeric_limits<double>::infinity();
}

namespace {

void regime_advisory(IntensityTrace& trace, std::size_t low_points) {
    if (low_points == 0) return;
    trace.advisories.push_back(
        std::to_string(low_points) +
        " grid point(s) have q_A a < 1, where the independent-atom decay model is not accurate");
}

}  // namespace

IntensityTrace emission_sweep_a(const SignState& state, std::span<const double> a_grid,
                                double phi, double obs_x, double t, const ChainConfig& config,
                                const AtomicScales& scales) {
    if (a_grid.empty()) throw DomainError("emission sweep grid is empty");
    IntensityTrace trace;
    trace.reference_intensity = reference_intensity(config.dipole_moment_cm, scales.omega_a, obs_x);
    const int n = static_cast<int>(state.size());
    std::size_t low = 0;
    for (double a : a_grid) {
        const auto geom = build_geometry(n, a, phi, obs_x);
        if (t < geom.max_retardation()) {
            std::ostringstream os;
            os.precision(17);
            os << "grid point a = " << units::m_to_angstrom(a) << " A violates causality: t = " << t
               << " s precedes the retarded time " << geom.max_retardation() << " s";
            throw CausalityError(os.str());
        }
        if (scales.q_a * a < 1.0) ++low;
        trace.rows.emplace_back(a, total_intensity(state, geom, scales, t));
    }
    if (obs_x < 10.0 * scales.lambda_a)
        trace.advisories.push_back("observation point is not in the far zone (x < 10 lambda_A)");
    regime_advisory(trace, low);
    return trace;
}

IntensityTrace emission_sweep_t(const SignState& state, double a, std::span<const double> t_grid,
                                double phi, double obs_x, const ChainConfig& config,
                                const AtomicScales& scales) {
    if (t_grid.empty()) throw DomainError("emission sweep grid is empty");
    IntensityTrace trace;
    trace.reference_intensity = reference_intensity(config.dipole_moment_cm, scales.omega_a, obs_x);
    const auto geom = build_geometry(static_cast<int>(state.size()), a, phi, obs_x);
    for (double t : t_grid) {
        if (t < geom.max_retardation()) {
            std::ostringstream os;
            os.precision(17);
            os << "grid point t = " << t << " s violates causality: it precedes the retarded time "
               << geom.max_retardation() << " s";
            throw CausalityError(os.str());
        }
        trace.rows.emplace_back(t, total_intensity(state, geom, scales, t));
    }
    if (obs_x < 10.0 * scales.lambda_a)
        trace.advisories.push_back("observation point is not in the far zone (x < 10 lambda_A)");
    regime_advisory(trace, scales.q_a * a < 1.0 ? t_grid.size() : 0);
    return trace;
}

}  // namespace chainrad
