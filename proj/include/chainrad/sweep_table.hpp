#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace chainrad {

/// Ordered rows of (grid point -> computed values), ready for CSV emission.
///
/// Metadata lines are written before the header and footer lines after the
/// last row; both are prefixed with "# " on output.
struct SweepTable {
    std::vector<std::string> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> footer;

    /// Index of the named column; throws std::out_of_range if absent.
    std::size_t column_index(std::string_view name) const;
    std::vector<double> column(std::string_view name) const;

    void write_csv(std::ostream& out) const;
};

/// Shortest round-trip decimal representation (locale independent).
std::string format_number(double v);

/// Uniform grid of n points on [lo, hi], endpoints included.
std::vector<double> linspace(double lo, double hi, std::size_t n);
/// Logarithmic grid of n points on [lo, hi], endpoints included. lo must be > 0.
std::vector<double> logspace(double lo, double hi, std::size_t n);

/// Column suffix for an angle given in radians, e.g. "phi0", "phi45", "phi22.5".
std::string phi_label(double phi_rad);

}  // namespace chainrad
