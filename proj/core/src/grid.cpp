#include "triphoton/grid.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

namespace triphoton::sweep {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_plain(std::string_view s, std::string_view whole) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc{} || ptr != last) {
    throw ConfigError("cannot parse number '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

double parse_value(std::string_view text) {
  const std::string_view s = trim(text);
  const auto pos = s.find("pi");
  double v = 0.0;
  if (pos == std::string_view::npos) {
    v = parse_plain(s, text);
  } else {
    std::string_view head = s.substr(0, pos);
    std::string_view tail = s.substr(pos + 2);
    if (!head.empty() && head.back() == '*') head.remove_suffix(1);
    double factor = 1.0;
    if (head == "-") {
      factor = -1.0;
    } else if (!head.empty() && head != "+") {
      factor = parse_plain(head, text);
    }
    double divisor = 1.0;
    if (!tail.empty()) {
      if (tail.front() != '/') throw ConfigError("cannot parse number '" + std::string(text) + "'");
      divisor = parse_plain(tail.substr(1), text);
      if (divisor == 0.0) throw ConfigError("division by zero in '" + std::string(text) + "'");
    }
    v = factor * std::numbers::pi / divisor;
  }
  if (!std::isfinite(v)) throw ConfigError("non-finite value '" + std::string(text) + "'");
  return v;
}

std::vector<double> linspace(double start, double stop, int count) {
  if (count < 1) throw ConfigError("grid count must be at least 1");
  std::vector<double> out(static_cast<std::size_t>(count));
  if (count == 1) {
    out[0] = start;
    return out;
  }
  const double step = (stop - start) / (count - 1);
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = start + step * i;
  out.back() = stop;
  return out;
}

std::vector<double> logspace(double start, double stop, int count) {
  if (!(start > 0.0) || !(stop > 0.0)) throw ConfigError("log grid endpoints must be positive");
  std::vector<double> out = linspace(std::log10(start), std::log10(stop), count);
  for (double& x : out) x = std::pow(10.0, x);
  out.front() = start;
  if (count > 1) out.back() = stop;
  return out;
}

std::vector<double> parse_grid(std::string_view text) {
  std::string_view s = trim(text);
  bool log = false;
  if (s.starts_with("log:")) {
    log = true;
    s.remove_prefix(4);
  }
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ':') {
      parts.push_back(s.substr(begin, i - begin));
      begin = i + 1;
    }
  }
  if (parts.size() == 1 && !log) return {parse_value(parts[0])};
  if (parts.size() != 3) {
    throw ConfigError("grid '" + std::string(text) + "' must have the form start:stop:count");
  }
  const double start = parse_value(parts[0]);
  const double stop = parse_value(parts[1]);
  const double count_real = parse_plain(trim(parts[2]), text);
  if (count_real != std::floor(count_real) || count_real < 1 || count_real > 1e7) {
    throw ConfigError("grid count in '" + std::string(text) + "' must be a positive integer");
  }
  const int count = static_cast<int>(count_real);
  return log ? logspace(start, stop, count) : linspace(start, stop, count);
}

}  // namespace triphoton::sweep
