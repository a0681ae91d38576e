#include "chainrad/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "chainrad/config_io.hpp"
#include "chainrad/coupling.hpp"
#include "chainrad/damping.hpp"
#include "chainrad/emission.hpp"
#include "chainrad/errors.hpp"
#include "chainrad/figures.hpp"
#include "chainrad/units.hpp"

namespace chainrad::cli {

namespace {

constexpr double kVerifyTolerance = 1e-8;

double parse_number(std::string_view text, const char* what) {
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw UsageError(std::string(what) + ": '" + std::string(text) + "' is not a number");
    return v;
}

ChainConfig resolve_config(const RunSpec& spec) {
    auto doc = spec.config_path ? read_config_file(*spec.config_path) : default_config_json();
    for (const auto& o : spec.overrides) apply_override(doc, o);
    return config_from_json(doc);
}

std::vector<double> resolve_phis(const RunSpec& spec, const ChainConfig& config) {
    if (spec.phi_list_deg.empty()) return {config.polarization_rad};
    std::vector<double> out;
    for (double deg : spec.phi_list_deg) out.push_back(units::deg_to_rad(deg));
    return out;
}

Range range_or(const RunSpec& spec, double lo, double hi) {
    return spec.range.value_or(Range{lo, hi});
}

SweepTable with_config(SweepTable t, const ChainConfig& config) {
    auto meta = metadata_lines(config);
    meta.insert(meta.end(), t.metadata.begin(), t.metadata.end());
    t.metadata = std::move(meta);
    return t;
}

SweepTable cmd_scales(const ChainConfig& config) {
    const auto s = derive_scales(config);
    SweepTable t;
    t.columns = {"omega_a_rad_s", "q_a_per_m", "lambda_a_m", "gamma_a_hz", "qa"};
    t.rows.push_back({s.omega_a, s.q_a, s.lambda_a, s.gamma_a, s.q_a * config.lattice_const_m});
    return with_config(std::move(t), config);
}

SweepTable cmd_coupling(const RunSpec& spec, const ChainConfig& config) {
    if (spec.matrix) {
        const auto m = spec.neighbors ? coupling_matrix(config, *spec.neighbors) : coupling_matrix(config);
        SweepTable t;
        t.columns.push_back("n");
        for (std::size_t j = 0; j < m.dim(); ++j) t.columns.push_back("J_m" + std::to_string(j + 1) + "_hz");
        for (std::size_t i = 0; i < m.dim(); ++i) {
            std::vector<double> row{static_cast<double>(i + 1)};
            for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.off_diag(i, j));
            t.rows.push_back(std::move(row));
        }
        t.metadata.push_back("site energy omega_a=" + format_number(m.diagonal()) + " rad/s" +
                             (spec.neighbors ? ", bonds truncated at |n-m| <= " +
                                                   std::to_string(*spec.neighbors)
                                             : std::string()));
        return with_config(std::move(t), config);
    }
    const auto r = range_or(spec, 0.01, 20.0);
    const auto phis = resolve_phis(spec, config);
    return with_config(coupling_sweep(r.lo, r.hi, spec.points.value_or(1000), phis), config);
}

SweepTable cmd_damping(const RunSpec& spec, const ChainConfig& config) {
    const auto state = parse_state(spec.state_token.value_or("sym"), config.n_atoms);
    const auto r = range_or(spec, 0.01, 20.0);
    if (!(r.lo > 0.0)) throw DomainError("x grid must not touch x = 0");
    const auto grid = linspace(r.lo, r.hi, spec.points.value_or(1000));
    auto t = x_sweep(state, grid, resolve_phis(spec, config), spec.oracle);
    t.metadata.push_back("state=" + state.pattern());
    return with_config(std::move(t), config);
}

SweepTable cmd_nscaling(const RunSpec& spec, const ChainConfig& config) {
    const auto r = range_or(spec, 1.0, 200.0);
    const int lo = static_cast<int>(r.lo), hi = static_cast<int>(r.hi);
    if (lo < 1 || hi < lo || lo != r.lo || hi != r.hi)
        throw UsageError("N range must be integers with 1 <= lo <= hi");
    const double x = dimensionless_separation(config);
    auto t = n_scaling_sweep(hi, x, resolve_phis(spec, config), spec.oracle);
    std::erase_if(t.rows, [&](const auto& row) { return row[0] < lo; });
    t.metadata.push_back("qa=" + format_number(x));
    return with_config(std::move(t), config);
}

SweepTable cmd_angles(const RunSpec& spec, const ChainConfig& config) {
    const auto r = range_or(spec, 0.0, 180.0);
    std::vector<double> grid;
    for (double deg : linspace(r.lo, r.hi, spec.points.value_or(181))) grid.push_back(units::deg_to_rad(deg));
    const double x = dimensionless_separation(config);
    auto t = angle_sweep(config.n_atoms, x, grid, spec.oracle);
    t.metadata.push_back("N=" + std::to_string(config.n_atoms) + " qa=" + format_number(x));
    return with_config(std::move(t), config);
}

SweepTable cmd_emission(const RunSpec& spec, const ChainConfig& config, std::ostream& err) {
    const auto state = parse_state(spec.state_token.value_or("sym"), config.n_atoms);
    const auto scales = derive_scales(config);
    const double obs_x = units::angstrom_to_m(spec.obs_x_angstrom.value_or(1e6));
    if (!(obs_x > 0.0)) throw DomainError("observation distance must be positive");
    const double phi = config.polarization_rad;

    IntensityTrace trace;
    SweepTable t;
    double t_obs = 0.0;
    if (spec.axis == "a") {
        t_obs = spec.time_s.value_or(2.0 * obs_x / units::kSpeedOfLight);
        double lo = 1e3, hi = 1e7;
        if (spec.range) {
            lo = spec.range->lo;
            hi = spec.range->hi;
        } else {
            const double limit = units::m_to_angstrom(causal_lattice_limit(config.n_atoms, obs_x, t_obs));
            if (limit < hi) {
                if (!(limit > lo)) throw CausalityError("default lattice grid lies entirely outside the causal region");
                err << "note: default a grid clipped to the causal limit " << limit << " A\n";
                hi = limit;
            }
        }
        if (!(lo > 0.0) || !(hi > lo)) throw UsageError("a range must satisfy 0 < lo < hi");
        std::vector<double> grid;
        for (double a : logspace(lo, hi, spec.points.value_or(2000))) grid.push_back(units::angstrom_to_m(a));
        trace = emission_sweep_a(state, grid, phi, obs_x, t_obs, config, scales);
        t.columns = {"a_angstrom", "intensity_ratio"};
        for (const auto& [a, v] : trace.rows) t.rows.push_back({units::m_to_angstrom(a), v});
    } else if (spec.axis == "t") {
        const auto geom = build_geometry(config, obs_x);
        const double t0 = geom.max_retardation();
        const auto r = range_or(spec, t0, t0 + 5.0 / scales.gamma_a);
        const auto grid = linspace(r.lo, r.hi, spec.points.value_or(1000));
        trace = emission_sweep_t(state, config.lattice_const_m, grid, phi, obs_x, config, scales);
        t.columns = {"t_s", "intensity_ratio"};
        for (const auto& [time, v] : trace.rows) t.rows.push_back({time, v});
        t_obs = r.lo;
    } else {
        throw UsageError("--axis must be 'a' or 't'");
    }
    for (const auto& note : trace.advisories) err << "warning: " << note << '\n';
    t.metadata.push_back("emission: state=" + state.pattern() +
                         " phi_deg=" + format_number(units::rad_to_deg(phi)) +
                         " x_angstrom=" + format_number(units::m_to_angstrom(obs_x)) +
                         (spec.axis == "a" ? " t_s=" + format_number(t_obs)
                                           : " a_angstrom=" + format_number(units::m_to_angstrom(config.lattice_const_m))) +
                         " I0_w_m2=" + format_number(trace.reference_intensity));
    return with_config(std::move(t), config);
}

SweepTable cmd_verify(const RunSpec& spec, int& status, std::ostream& err) {
    const auto r = range_or(spec, 1.0, 8.0);
    if (r.lo != 1.0 && r.lo != std::floor(r.lo)) throw UsageError("verify range must be integers");
    const std::vector<double> xs = {0.1, 0.5, 1.0, 3.0, 10.0};
    const std::vector<double> phis = {0.0, units::kPi / 4.0, units::kPi / 2.0};
    auto t = oracle_equivalence_table(static_cast<int>(r.hi), xs, phis);
    std::erase_if(t.rows, [&](const auto& row) { return row[0] < r.lo; });
    double worst = 0.0;
    for (const auto& row : t.rows) worst = std::max(worst, row.back());
    t.footer = {"max_rel_err=" + format_number(worst),
                "tolerance=" + format_number(kVerifyTolerance),
                std::string("result=") + (worst <= kVerifyTolerance ? "PASS" : "FAIL")};
    t.metadata = {std::string("chainrad ") + CHAINRAD_VERSION,
                  "verify: closed-form rate vs golden-rule quadrature over all sign states"};
    if (worst > kVerifyTolerance) {
        err << "verify: max relative error " << worst << " exceeds " << kVerifyTolerance << '\n';
        status = kAccuracy;
    }
    return t;
}

}  // namespace

SignState parse_state(std::string_view token, int n) {
    if (token == "sym") return symmetric_state(n);
    if (token == "alt") return alternating_state(n);
    if (token.size() != static_cast<std::size_t>(n))
        throw UsageError("state pattern '" + std::string(token) + "' has length " +
                         std::to_string(token.size()) + " but the chain has " + std::to_string(n) +
                         " atoms");
    std::vector<int> c;
    for (char ch : token) {
        if (ch == '+') c.push_back(1);
        else if (ch == '-') c.push_back(-1);
        else throw UsageError(std::string("invalid character '") + ch + "' in state pattern");
    }
    return SignState(std::move(c));
}

Range parse_range(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw UsageError("range must look like lo:hi");
    return {parse_number(text.substr(0, colon), "range"), parse_number(text.substr(colon + 1), "range")};
}

int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        int status = kOk;
        SweepTable table;
        if (spec.command == Command::figure) {
            table = make_figure(spec.figure, {spec.points, spec.oracle});
        } else if (spec.command == Command::verify) {
            table = cmd_verify(spec, status, err);
        } else {
            const auto config = resolve_config(spec);
            switch (spec.command) {
                case Command::scales: table = cmd_scales(config); break;
                case Command::coupling: table = cmd_coupling(spec, config); break;
                case Command::damping: table = cmd_damping(spec, config); break;
                case Command::nscaling: table = cmd_nscaling(spec, config); break;
                case Command::angles: table = cmd_angles(spec, config); break;
                case Command::emission: table = cmd_emission(spec, config, err); break;
                default: break;
            }
        }

        std::ostringstream csv;
        table.write_csv(csv);
        if (spec.output_path) {
            std::ofstream file(*spec.output_path, std::ios::binary);
            if (!file) throw UsageError("cannot open output file " + *spec.output_path);
            file << csv.str();
        } else {
            out << csv.str();
        }
        return status;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const AccuracyError& e) {
        err << "accuracy error: " << e.what() << '\n';
        return kAccuracy;
    } catch (const CausalityError& e) {
        err << "causality error: " << e.what() << '\n';
        return kCausality;
    }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Collective radiative properties of a finite chain of two-level emitters"};
    app.require_subcommand(1);
    RunSpec spec;
    std::string range_text, axis = "a";
    std::optional<std::size_t> points;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", spec.config_path, "JSON chain configuration");
        sub->add_option("--set", spec.overrides, "Override a config key (key=value), repeatable");
        sub->add_option("--out", spec.output_path, "Write CSV here instead of stdout");
    };
    auto sweep = [&](CLI::App* sub) {
        sub->add_option("--range", range_text, "Sweep range lo:hi");
        sub->add_option("--points", points, "Number of grid points")->check(CLI::Range(2, 10000000));
    };
    auto angles = [&](CLI::App* sub) {
        sub->add_option("--phi-list", spec.phi_list_deg, "Polarization angles in degrees")->delimiter(',');
    };

    struct Entry {
        const char* name;
        Command cmd;
        const char* help;
    };
    const Entry entries[] = {
        {"scales", Command::scales, "Derived single-atom scales"},
        {"coupling", Command::coupling, "Dipole-dipole transfer J/Gamma_A vs q_A a, or the chain matrix"},
        {"damping", Command::damping, "Collective decay rate vs q_A a for one state"},
        {"nscaling", Command::nscaling, "Symmetric-state rate vs number of atoms"},
        {"angles", Command::angles, "Symmetric-state rate vs polarization angle"},
        {"emission", Command::emission, "Far-field intensity vs lattice constant or time"},
        {"figure", Command::figure, "Reproduce a numbered figure as CSV"},
        {"verify", Command::verify, "Closed form vs quadrature oracle over all sign states"},
    };
    for (const auto& e : entries) {
        auto* sub = app.add_subcommand(e.name, e.help);
        sub->callback([&spec, cmd = e.cmd] { spec.command = cmd; });
        common(sub);
        if (e.cmd != Command::scales) sweep(sub);
        if (e.cmd == Command::coupling || e.cmd == Command::damping || e.cmd == Command::nscaling) angles(sub);
        if (e.cmd == Command::damping || e.cmd == Command::nscaling || e.cmd == Command::angles ||
            e.cmd == Command::figure)
            sub->add_flag("--oracle", spec.oracle, "Attach quadrature cross-check columns");
        if (e.cmd == Command::damping || e.cmd == Command::emission)
            sub->add_option("--state", spec.state_token, "sym, alt or a +/- pattern");
        if (e.cmd == Command::coupling) {
            sub->add_flag("--matrix", spec.matrix, "Print the chain coupling matrix J_nm");
            sub->add_option("--neighbors", spec.neighbors, "Keep only bonds with |n-m| <= k");
        }
        if (e.cmd == Command::emission) {
            sub->add_option("--obs-x", spec.obs_x_angstrom, "Observation distance in angstrom (default 1e6)");
            sub->add_option("--time", spec.time_s, "Observation time in seconds (default 2x/c)");
            sub->add_option("--axis", axis, "Sweep variable: a or t")->check(CLI::IsMember({"a", "t"}));
        }
        if (e.cmd == Command::figure) sub->add_option("number", spec.figure, "Figure number")->required();
    }

    try {
        app.parse(argc, argv);
        if (!range_text.empty()) spec.range = parse_range(range_text);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kOk;
        }
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }
    spec.points = points;
    spec.axis = axis;
    return run(spec, out, err);
}

}  // namespace chainrad::cli
