#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "chainrad/sweep_table.hpp"

namespace chainrad {

/// Figure numbers that have a CSV reproduction (1 and 15 are schematics).
std::span<const int> supported_figures();
bool is_supported_figure(int number);

struct FigureOptions {
    std::optional<std::size_t> points;  // overrides the default grid density
    bool oracle = false;                // attach quadrature columns to rate figures
};

/// Builds the data behind the numbered figure, metadata included.
/// Throws UsageError for unsupported numbers.
SweepTable make_figure(int number, const FigureOptions& opts = {});

}  // namespace chainrad
