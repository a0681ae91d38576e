#include "chainrad/figures.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "chainrad/config_io.hpp"
#include "chainrad/coupling.hpp"
#include "chainrad/damping.hpp"
#include "chainrad/emission.hpp"
#include "chainrad/errors.hpp"
#include "chainrad/units.hpp"

namespace chainrad {

namespace {

constexpr std::array<int, 18> kFigures = {2,  3,  4,  5,  6,  7,  8,  9,  10,
                                          11, 12, 13, 14, 16, 17, 18, 19, 20};

constexpr double kXMin = 0.01;
constexpr double kXMax = 20.0;
constexpr std::size_t kXPoints = 1000;
constexpr int kNMax = 200;
constexpr std::size_t kAnglePoints = 181;
constexpr std::size_t kEmissionPoints = 2000;
constexpr double kEmissionAMinAngstrom = 1e3;
constexpr double kEmissionObsXAngstrom = 1e6;

const std::array<double, 2> kBothPolarizations = {0.0, units::kPi / 2.0};

SweepTable coupling_figure(std::span<const double> phis, std::size_t points) {
    return coupling_sweep(kXMin, kXMax, points, phis);
}

SweepTable kernel_figure(std::size_t points) {
    SweepTable t;
    t.columns = {"x"};
    for (double phi : kBothPolarizations) t.columns.push_back("F_" + phi_label(phi));
    for (double x : linspace(kXMin, kXMax, points)) {
        std::vector<double> row{x};
        for (double phi : kBothPolarizations) row.push_back(f_kernel(x, phi));
        t.rows.push_back(std::move(row));
    }
    return t;
}

SweepTable rate_vs_x_figure(const SignState& state, std::size_t points, bool oracle) {
    const auto grid = linspace(kXMin, kXMax, points);
    auto t = x_sweep(state, grid, kBothPolarizations, oracle);
    t.metadata.push_back("state=" + state.pattern());
    return t;
}

SweepTable emission_figure(PairState which, double phi_deg, std::size_t points) {
    const auto config = ChainConfig::make(2, 1000.0, 1.0, 1.0, phi_deg, 1e8);
    const auto scales = derive_scales(config);
    const double obs_x = units::angstrom_to_m(kEmissionObsXAngstrom);
    const double t = 2.0 * obs_x / units::kSpeedOfLight;
    const double a_max = causal_lattice_limit(2, obs_x, t);
    const auto grid = logspace(units::angstrom_to_m(kEmissionAMinAngstrom), a_max, points);
    const auto state = which == PairState::symmetric ? symmetric_state(2) : alternating_state(2);
    const auto trace =
        emission_sweep_a(state, grid, config.polarization_rad, obs_x, t, config, scales);

    SweepTable table;
    table.metadata = metadata_lines(config);
    table.metadata.push_back("emission: state=" + state.pattern() + " phi_deg=" +
                             format_number(phi_deg) + " x_angstrom=" +
                             format_number(kEmissionObsXAngstrom) + " t_s=" + format_number(t) +
                             " I0_w_m2=" + format_number(trace.reference_intensity));
    table.metadata.push_back("grid: a up to the causal limit sqrt((ct)^2 - x^2)");
    table.columns = {"a_angstrom", "intensity_ratio"};
    for (const auto& [a, ratio] : trace.rows) table.rows.push_back({units::m_to_angstrom(a), ratio});
    return table;
}

}  // namespace

std::span<const int> supported_figures() { return kFigures; }

bool is_supported_figure(int number) {
    return std::find(kFigures.begin(), kFigures.end(), number) != kFigures.end();
}

SweepTable make_figure(int number, const FigureOptions& opts) {
    if (!is_supported_figure(number))
        throw UsageError("unsupported figure number " + std::to_string(number));

    auto pts = [&](std::size_t def) { return opts.points.value_or(def); };
    const std::array<double, 1> phi0 = {0.0};
    const std::array<double, 1> phi90 = {units::kPi / 2.0};

    SweepTable t;
    switch (number) {
        case 2: t = coupling_figure(kBothPolarizations, pts(kXPoints)); break;
        case 3: t = coupling_figure(phi0, pts(kXPoints)); break;
        case 4: t = coupling_figure(phi90, pts(kXPoints)); break;
        case 5: t = kernel_figure(pts(kXPoints)); break;
        case 6: t = rate_vs_x_figure(symmetric_state(5), pts(kXPoints), opts.oracle); break;
        case 7: t = n_scaling_sweep(kNMax, 0.001, kBothPolarizations, opts.oracle); break;
        case 8: t = n_scaling_sweep(kNMax, 0.1, kBothPolarizations, opts.oracle); break;
        case 9: t = n_scaling_sweep(kNMax, 1.0, kBothPolarizations, opts.oracle); break;
        case 10: {
            std::vector<double> grid;
            for (double deg : linspace(0.0, 180.0, pts(kAnglePoints)))
                grid.push_back(units::deg_to_rad(deg));
            t = angle_sweep(100, 0.1, grid, opts.oracle);
            break;
        }
        case 11: t = rate_vs_x_figure(symmetric_state(2), pts(kXPoints), opts.oracle); break;
        case 12: t = rate_vs_x_figure(alternating_state(2), pts(kXPoints), opts.oracle); break;
        case 13: t = rate_vs_x_figure(symmetric_state(3), pts(kXPoints), opts.oracle); break;
        case 14: t = rate_vs_x_figure(alternating_state(3), pts(kXPoints), opts.oracle); break;
        case 16: t = emission_figure(PairState::symmetric, 0.0, pts(kEmissionPoints)); break;
        case 17: t = emission_figure(PairState::symmetric, 45.0, pts(kEmissionPoints)); break;
        case 18: t = emission_figure(PairState::symmetric, 90.0, pts(kEmissionPoints)); break;
        case 19: t = emission_figure(PairState::antisymmetric, 0.0, pts(kEmissionPoints)); break;
        case 20: t = emission_figure(PairState::antisymmetric, 45.0, pts(kEmissionPoints)); break;
    }

    // Emission figures already carry the version and resolved config.
    std::vector<std::string> head = {"figure " + std::to_string(number)};
    if (number < 16) head.insert(head.begin(), std::string("chainrad ") + CHAINRAD_VERSION);
    if (number == 18) head.push_back("antisymmetric trace is identical at phi = 90 deg");
    t.metadata.insert(t.metadata.begin(), head.begin(), head.end());
    return t;
}

}  // namespace chainrad
