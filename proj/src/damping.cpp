#include "chainrad/damping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "chainrad/errors.hpp"
#include "chainrad/units.hpp"

namespace chainrad {

namespace {

// sin(x)/x - 1 and (cos x / x^2 - sin x / x^3) + 1/3, the two angular pieces
// of F with their x -> 0 limits removed.
struct KernelPieces {
    double sinc_minus_one;
    double near_plus_third;
};

KernelPieces pieces_taylor(double x) {
    const double x2 = x * x;
    const double x4 = x2 * x2;
    return {-x2 / 6.0 + x4 / 120.0, x2 / 30.0 - x4 / 840.0};
}

KernelPieces pieces_series(double x) {
    const double x2 = x * x;
    // t_k = (-1)^k x^{2k} / (2k+1)!, r_k = t_k / x^2; the second piece sums 2k r_k.
    double t = 1.0, r = 1.0;
    double s1 = 0.0, s2 = 0.0;
    for (int k = 1; k < 40; ++k) {
        const double denom = (2.0 * k) * (2.0 * k + 1.0);
        t *= -x2 / denom;
        r = (k == 1) ? -1.0 / 6.0 : r * (-x2 / denom);
        s1 += t;
        if (k >= 2) s2 += 2.0 * k * r;
        if (k >= 3 && std::abs(t) <= 1e-18 * std::abs(s1) &&
            std::abs(2.0 * k * r) <= 1e-18 * std::abs(s2))
            break;
    }
    return {s1, s2};
}

KernelPieces pieces_direct(double x) {
    const double s = std::sin(x), c = std::cos(x);
    return {s / x - 1.0, c / (x * x) - s / (x * x * x) + 1.0 / 3.0};
}

double deficit_from(const KernelPieces& p, double phi) {
    const double c2 = std::cos(phi) * std::cos(phi);
    return 1.5 * ((1.0 - c2) * p.sinc_minus_one + (1.0 - 3.0 * c2) * p.near_plus_third);
}

void require_positive(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError(std::string(what) + ": x = q_A a must be positive and finite");
}

}  // namespace

namespace detail {

double f_kernel_direct(double x, double phi) {
    const double c2 = std::cos(phi) * std::cos(phi);
    const double s = std::sin(x), c = std::cos(x);
    return 1.5 * (s / x * (1.0 - c2) + (c / (x * x) - s / (x * x * x)) * (1.0 - 3.0 * c2));
}

double f_kernel_series(double x, double phi) { return 1.0 + deficit_from(pieces_series(x), phi); }

double f_kernel_taylor(double x, double phi) { return 1.0 + deficit_from(pieces_taylor(x), phi); }

double f_kernel_deficit(double x, double phi) {
    x = std::abs(x);
    if (x < kKernelTaylorThreshold) return deficit_from(pieces_taylor(x), phi);
    if (x < kKernelSeriesThreshold) return deficit_from(pieces_series(x), phi);
    return deficit_from(pieces_direct(x), phi);
}

}  // namespace detail

double f_kernel(double x, double phi) {
    x = std::abs(x);
    if (x >= kKernelSeriesThreshold) return detail::f_kernel_direct(x, phi);
    return 1.0 + detail::f_kernel_deficit(x, phi);
}

std::string_view to_string(DampingMethod m) {
    return m == DampingMethod::closed_form ? "closed_form" : "quadrature";
}

double relative_error(double value, double reference) {
    const double scale = std::max(std::abs(reference), std::numeric_limits<double>::min());
    return std::abs(value - reference) / scale;
}

// Both closed forms are evaluated as (sum C)^2 / N + (2/N) sum_k S_k (F(kx) - 1),
// with S_k = sum_n C_n C_{n+k} the integer bond-length autocorrelation. This is
// algebraically the textbook 1 + (2/N) sum C_n C_m F form, but dark states whose
// rate is orders of magnitude below 1 no longer lose digits to cancellation.
DampingResult damping_symmetric(int n, double x, double phi) {
    auto state = symmetric_state(n);
    require_positive(x, "damping_symmetric");
    double sum = 0.0;
    for (int k = n - 1; k >= 1; --k)
        sum += static_cast<double>(n - k) * detail::f_kernel_deficit(k * x, phi);
    const double rate = static_cast<double>(n) + 2.0 * sum / static_cast<double>(n);
    return {rate, DampingMethod::closed_form, std::move(state), x, phi};
}

DampingResult damping_general(const SignState& state, double x, double phi) {
    require_positive(x, "damping_general");
    const auto n = state.size();
    long total = 0;
    for (int c : state.coeffs()) total += c;
    double sum = 0.0;
    for (std::size_t k = n - 1; k >= 1; --k) {
        long s_k = 0;
        for (std::size_t i = 0; i + k < n; ++i) s_k += state[i] * state[i + k];
        if (s_k != 0)
            sum += static_cast<double>(s_k) * detail::f_kernel_deficit(static_cast<double>(k) * x, phi);
    }
    const double nd = static_cast<double>(n);
    const double rate = static_cast<double>(total * total) / nd + 2.0 * sum / nd;
    return {rate, DampingMethod::closed_form, state, x, phi};
}

DampingResult damping_quadrature_oracle(const SignState& state, double x, double phi,
                                        quadrature::Options opts) {
    require_positive(x, "damping_quadrature_oracle");
    const auto n = state.size();
    const double c2 = std::cos(phi) * std::cos(phi);
    const double inv_x2 = 1.0 / (x * x);
    const auto coeffs = state.coeffs();

    auto integrand = [&](double y) {
        double re = 0.0, im = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double phase = static_cast<double>(i + 1) * y;
            re += coeffs[i] * std::cos(phase);
            im -= coeffs[i] * std::sin(phase);
        }
        const double weight = (1.0 + c2) - y * y * inv_x2 * (3.0 * c2 - 1.0);
        return (re * re + im * im) * weight;
    };

    // The highest harmonic of |sum C e^{-iny}|^2 is (N-1) y; give every
    // initial panel roughly one period of it.
    const double periods = x * static_cast<double>(n > 1 ? n - 1 : 1) / units::kPi;
    opts.initial_panels = std::max(opts.initial_panels, 1 + static_cast<std::size_t>(std::ceil(periods)));

    // Tolerances apply to the normalized rate, so rescale them to the raw integral.
    const double norm = 3.0 / (8.0 * x * static_cast<double>(n));
    opts.abs_tol /= norm;
    const auto res = quadrature::integrate(integrand, -x, x, opts);
    return {res.value * norm, DampingMethod::quadrature, state, x, phi};
}

namespace {

struct OracleTracker {
    bool enabled = false;
    double max_rel_err = 0.0;

    double check(const SignState& s, double x, double phi, double closed) {
        const double q = damping_quadrature_oracle(s, x, phi).rate_ratio;
        max_rel_err = std::max(max_rel_err, relative_error(closed, q));
        return q;
    }

    void finish(SweepTable& t) const {
        if (enabled) t.footer.push_back("max_rel_err=" + format_number(max_rel_err));
    }
};

}  // namespace

SweepTable n_scaling_sweep(int n_max, double x, std::span<const double> phi_list, bool oracle) {
    if (n_max < 1) throw DomainError("n_scaling_sweep: n_max must be >= 1");
    require_positive(x, "n_scaling_sweep");
    SweepTable t;
    t.columns.push_back("N");
    for (double phi : phi_list) t.columns.push_back("gamma_" + phi_label(phi));
    if (oracle)
        for (double phi : phi_list) t.columns.push_back("gamma_quadrature_" + phi_label(phi));

    OracleTracker tracker{oracle};
    for (int n = 1; n <= n_max; ++n) {
        std::vector<double> row{static_cast<double>(n)};
        std::vector<double> closed;
        for (double phi : phi_list) closed.push_back(damping_symmetric(n, x, phi).rate_ratio);
        row.insert(row.end(), closed.begin(), closed.end());
        if (oracle) {
            const auto s = symmetric_state(n);
            for (std::size_t i = 0; i < phi_list.size(); ++i)
                row.push_back(tracker.check(s, x, phi_list[i], closed[i]));
        }
        t.rows.push_back(std::move(row));
    }
    tracker.finish(t);
    return t;
}

SweepTable angle_sweep(int n, double x, std::span<const double> phi_grid, bool oracle) {
    require_positive(x, "angle_sweep");
    const auto s = symmetric_state(n);
    SweepTable t;
    t.columns = {"phi_deg", "gamma"};
    if (oracle) t.columns.push_back("gamma_quadrature");
    OracleTracker tracker{oracle};
    for (double phi : phi_grid) {
        const double g = damping_symmetric(n, x, phi).rate_ratio;
        std::vector<double> row{units::rad_to_deg(phi), g};
        if (oracle) row.push_back(tracker.check(s, x, phi, g));
        t.rows.push_back(std::move(row));
    }
    tracker.finish(t);
    return t;
}

SweepTable x_sweep(const SignState& state, std::span<const double> x_grid,
                   std::span<const double> phi_list, bool oracle) {
    const bool single = phi_list.size() == 1;
    auto name = [&](const char* base, double phi) {
        return single ? std::string(base) : std::string(base) + "_" + phi_label(phi);
    };
    SweepTable t;
    t.columns.push_back("x");
    for (double phi : phi_list) t.columns.push_back(name("gamma", phi));
    if (oracle)
        for (double phi : phi_list) t.columns.push_back(name("gamma_quadrature", phi));

    OracleTracker tracker{oracle};
    for (double x : x_grid) {
        require_positive(x, "x_sweep");
        std::vector<double> row{x};
        std::vector<double> closed;
        for (double phi : phi_list) closed.push_back(damping_general(state, x, phi).rate_ratio);
        row.insert(row.end(), closed.begin(), closed.end());
        if (oracle)
            for (std::size_t i = 0; i < phi_list.size(); ++i)
                row.push_back(tracker.check(state, x, phi_list[i], closed[i]));
        t.rows.push_back(std::move(row));
    }
    tracker.finish(t);
    return t;
}

SweepTable oracle_equivalence_table(int n_max, std::span<const double> xs,
                                    std::span<const double> phis) {
    if (n_max < 1 || n_max > kMaxEnumeratedAtoms)
        throw DomainError("oracle_equivalence_table: n_max out of range");
    SweepTable t;
    t.columns = {"N", "x", "phi_deg", "states", "max_rel_err"};
    double worst = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const auto states = enumerate_sign_states(n);
        for (double x : xs) {
            for (double phi : phis) {
                double row_worst = 0.0;
                for (const auto& s : states) {
                    const double closed = damping_general(s, x, phi).rate_ratio;
                    const double quad = damping_quadrature_oracle(s, x, phi).rate_ratio;
                    row_worst = std::max(row_worst, relative_error(closed, quad));
                }
                worst = std::max(worst, row_worst);
                t.rows.push_back({static_cast<double>(n), x, units::rad_to_deg(phi),
                                  static_cast<double>(states.size()), row_worst});
            }
        }
    }
    t.footer.push_back("max_rel_err=" + format_number(worst));
    return t;
}

}  // namespace chainrad
