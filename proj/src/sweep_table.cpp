#include "chainrad/sweep_table.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "chainrad/errors.hpp"
#include "chainrad/units.hpp"

namespace chainrad {

std::size_t SweepTable::column_index(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return i;
    throw std::out_of_range("no column named " + std::string(name));
}

std::vector<double> SweepTable::column(std::string_view name) const {
    const auto idx = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.at(idx));
    return out;
}

void SweepTable::write_csv(std::ostream& out) const {
    for (const auto& m : metadata) out << "# " << m << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << format_number(r[i]);
        out << '\n';
    }
    for (const auto& f : footer) out << "# " << f << '\n';
}

std::string format_number(double v) {
    if (v == 0.0) return "0";  // folds -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n < 2) throw DomainError("grid needs at least 2 points");
    std::vector<double> g(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) g[i] = lo + step * static_cast<double>(i);
    g.back() = hi;
    return g;
}

std::vector<double> logspace(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi > 0.0)) throw DomainError("logarithmic grid bounds must be positive");
    auto g = linspace(std::log(lo), std::log(hi), n);
    for (auto& v : g) v = std::exp(v);
    g.front() = lo;
    g.back() = hi;
    return g;
}

std::string phi_label(double phi_rad) {
    double deg = units::rad_to_deg(phi_rad);
    const double rounded = std::round(deg * 1e6) / 1e6;
    return "phi" + format_number(rounded);
}

}  // namespace chainrad
