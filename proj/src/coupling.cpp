#include "chainrad/coupling.hpp"

#include <cmath>
#include <sstream>

#include "chainrad/errors.hpp"

namespace chainrad {

namespace {

void require_positive(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        std::ostringstream os;
        os << what << ": separation must be positive and finite (got " << x << ")";
        throw DomainError(os.str());
    }
}

}  // namespace

namespace detail {

double transfer_bracket_direct(double x) {
    return std::sin(x) / (x * x) + std::cos(x) / (x * x * x);
}

// Laurent series: x^-3 + x^-1/2 - x/8 + x^3/144 - 7 x^5/40320 + ...
double transfer_bracket_series(double x) {
    const double x2 = x * x;
    return 1.0 / (x2 * x) + 0.5 / x - x / 8.0 + x2 * x / 144.0;
}

}  // namespace detail

double transfer_exact(double x, double phi) {
    require_positive(x, "transfer_exact");
    const double c2 = std::cos(phi) * std::cos(phi);
    const double bracket = x < kTransferSeriesThreshold ? detail::transfer_bracket_series(x)
                                                        : detail::transfer_bracket_direct(x);
    return 0.75 * (bracket * (1.0 - 3.0 * c2) - std::cos(x) / x * (1.0 - c2));
}

double transfer_electrostatic(double x, double phi) {
    require_positive(x, "transfer_electrostatic");
    const double c2 = std::cos(phi) * std::cos(phi);
    return 0.75 * (1.0 - 3.0 * c2) / (x * x * x);
}

CouplingMatrix::CouplingMatrix(std::size_t dim, double diagonal, std::vector<double> off_diag)
    : dim_(dim), diagonal_(diagonal), off_diag_(std::move(off_diag)) {
    if (off_diag_.size() != dim_ * dim_) throw DomainError("coupling matrix storage has wrong size");
}

CouplingMatrix coupling_matrix(const ChainConfig& config) {
    return coupling_matrix(config, static_cast<std::size_t>(config.n_atoms));
}

CouplingMatrix coupling_matrix(const ChainConfig& config, std::size_t max_range) {
    const auto scales = derive_scales(config);
    const auto n = static_cast<std::size_t>(config.n_atoms);
    const double qa = scales.q_a * config.lattice_const_m;

    // One value per bond length keeps J_nm a function of |n-m| only, bit for bit.
    std::vector<double> by_distance(n, 0.0);
    for (std::size_t d = 1; d < n && d <= max_range; ++d)
        by_distance[d] = scales.gamma_a * transfer_exact(qa * static_cast<double>(d),
                                                         config.polarization_rad);

    std::vector<double> j(n * n, 0.0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) j[r * n + c] = by_distance[r > c ? r - c : c - r];
    return CouplingMatrix(n, scales.omega_a, std::move(j));
}

SweepTable coupling_sweep(double x_min, double x_max, std::size_t n_points,
                          std::span<const double> phi_list) {
    if (!(x_min > 0.0)) throw DomainError("coupling sweep grid must not touch x = 0");
    if (!(x_max > x_min)) throw DomainError("coupling sweep needs x_min < x_max");
    if (n_points < 2) throw DomainError("coupling sweep needs at least 2 points");

    SweepTable t;
    t.columns.push_back("x");
    for (double phi : phi_list) t.columns.push_back("J_exact_" + phi_label(phi));
    for (double phi : phi_list) t.columns.push_back("J_approx_" + phi_label(phi));

    for (double x : linspace(x_min, x_max, n_points)) {
        std::vector<double> row{x};
        for (double phi : phi_list) row.push_back(transfer_exact(x, phi));
        for (double phi : phi_list) row.push_back(transfer_electrostatic(x, phi));
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace chainrad
