#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace triphoton::sweep {

inline constexpr std::string_view kCsvSchemaLine = "# triphoton-csv v1";

/// One evaluated grid point. Gains and variances are per mode; a gain is
/// NaN for a mode without seed photons, beta is NaN when the combination
/// is not beta-parameterized.
struct SweepRow {
  std::string scenario;
  int order = 0;
  double xi = 0.0;
  double n_in = 0.0;
  double phi = 0.0;
  double beta = 0.0;
  std::array<double, 3> theta{};
  double S = 0.0;
  double var_u = 0.0;
  double var_v = 0.0;
  double f_p = 0.0;
  double f_s = 0.0;
  std::string verdict;
  std::array<double, 3> gain{};
  double truncation_diagnostic = 0.0;
  std::array<double, 3> var_p{};
  std::array<double, 3> var_q{};

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Column names of schema v1, in order.
const std::vector<std::string>& csv_columns();

/// Renders with 17 significant digits, which round-trips every double.
std::string format_double(double v);

/// Writes the schema line, the column line and one line per row. Throws
/// std::logic_error if a row violates S = var_u + var_v.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
/// Throws std::runtime_error on a schema or column mismatch.
std::vector<SweepRow> read_csv(std::istream& in);

nlohmann::json to_json(const SweepRow& row);
void write_json(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace triphoton::sweep
