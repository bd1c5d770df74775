#pragma once

#include <stdexcept>
#include <string_view>
#include <vector>

namespace triphoton::sweep {

/// Malformed user configuration (flags, grids, presets).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses a real number or a multiple of pi: "1.5e10", "pi", "-pi",
/// "2pi", "pi/2", "3pi/2", "0.5*pi", "pi/3".
double parse_value(std::string_view text);

/// Parses "start:stop:count" (linear, both endpoints included) or
/// "log:start:stop:count" (geometric, both endpoints included). A single
/// value is accepted as a one-point grid.
std::vector<double> parse_grid(std::string_view text);

std::vector<double> linspace(double start, double stop, int count);
std::vector<double> logspace(double start, double stop, int count);

}  // namespace triphoton::sweep
