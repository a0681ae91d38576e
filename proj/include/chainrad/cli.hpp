#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chainrad/states.hpp"

namespace chainrad::cli {

enum class Command { scales, coupling, damping, nscaling, angles, emission, figure, verify };

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kConfig = 3,
    kAccuracy = 4,
    kCausality = 5,
};

struct Range {
    double lo = 0.0;
    double hi = 0.0;
};

struct RunSpec {
    Command command = Command::scales;
    std::optional<std::string> config_path;
    std::vector<std::string> overrides;  // key=value
    std::optional<Range> range;
    std::optional<std::size_t> points;
    std::optional<std::string> output_path;
    bool oracle = false;
    std::optional<std::string> state_token;
    int figure = 0;
    std::vector<double> phi_list_deg;        // empty: use the config's angle
    std::optional<double> obs_x_angstrom;    // emission
    std::optional<double> time_s;            // emission
    std::string axis = "a";                  // emission sweep axis: a or t
    bool matrix = false;                     // coupling: print the chain matrix
    std::optional<std::size_t> neighbors;    // coupling matrix truncation
};

/// Interprets "sym", "alt" or an explicit +/- pattern of length n.
/// Throws UsageError on anything else.
SignState parse_state(std::string_view token, int n);

/// Parses "lo:hi".
Range parse_range(std::string_view text);

/// Executes one command. CSV goes to `out` (or the output file), diagnostics
/// and advisories to `err`. Returns an ExitCode value.
int run(const RunSpec& spec, std::ostream& out, std::ostream& err);

/// argv front end used by the executable.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace chainrad::cli
