#include "triphoton/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace triphoton::sweep {

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols{
      "scenario", "order", "xi",    "n_in",  "phi",   "beta",  "theta1",
      "theta2",   "theta3", "S",    "var_u", "var_v", "f_p",   "f_s",
      "verdict",  "g1",    "g2",    "g3",    "truncation_diagnostic",
      "var_p1",   "var_p2", "var_p3", "var_q1", "var_q2", "var_q3"};
  return cols;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

void check_identity(const SweepRow& r) {
  const double sum = r.var_u + r.var_v;
  if (std::abs(r.S - sum) > 1e-12 * std::max(1.0, std::abs(r.S))) {
    throw std::logic_error("row violates S = var_u + var_v at n_in = " + format_double(r.n_in));
  }
}

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::runtime_error("bad numeric field '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      out.push_back(line.substr(begin, i - begin));
      begin = i + 1;
    }
  }
  return out;
}

std::string join(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  return out;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kCsvSchemaLine << '\n' << join(csv_columns()) << '\n';
  for (const SweepRow& r : rows) {
    check_identity(r);
    std::vector<std::string> f;
    f.reserve(csv_columns().size());
    f.push_back(r.scenario);
    f.push_back(std::to_string(r.order));
    for (double v : {r.xi, r.n_in, r.phi, r.beta, r.theta[0], r.theta[1], r.theta[2], r.S, r.var_u,
                     r.var_v, r.f_p, r.f_s}) {
      f.push_back(format_double(v));
    }
    f.push_back(r.verdict);
    for (double v : r.gain) f.push_back(format_double(v));
    f.push_back(format_double(r.truncation_diagnostic));
    for (double v : r.var_p) f.push_back(format_double(v));
    for (double v : r.var_q) f.push_back(format_double(v));
    out << join(f) << '\n';
  }
}

std::vector<SweepRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != kCsvSchemaLine) {
    throw std::runtime_error("missing schema line '" + std::string(kCsvSchemaLine) + "'");
  }
  if (!std::getline(in, line) || strip_cr(line) != join(csv_columns())) {
    throw std::runtime_error("column header does not match schema v1");
  }
  std::vector<SweepRow> rows;
  std::size_t line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != csv_columns().size()) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected " +
                               std::to_string(csv_columns().size()) + " fields");
    }
    SweepRow r;
    std::size_t i = 0;
    r.scenario = std::string(f[i++]);
    r.order = static_cast<int>(parse_double(f[i++]));
    for (double* p : {&r.xi, &r.n_in, &r.phi, &r.beta, &r.theta[0], &r.theta[1], &r.theta[2], &r.S,
                      &r.var_u, &r.var_v, &r.f_p, &r.f_s}) {
      *p = parse_double(f[i++]);
    }
    r.verdict = std::string(f[i++]);
    for (double& v : r.gain) v = parse_double(f[i++]);
    r.truncation_diagnostic = parse_double(f[i++]);
    for (double& v : r.var_p) v = parse_double(f[i++]);
    for (double& v : r.var_q) v = parse_double(f[i++]);
    rows.push_back(std::move(r));
  }
  return rows;
}

nlohmann::json to_json(const SweepRow& r) {
  // JSON has no NaN; non-finite values become null.
  auto num = [](double v) -> nlohmann::json {
    if (!std::isfinite(v)) return nullptr;
    return v;
  };
  auto triple = [&](const std::array<double, 3>& a) {
    return nlohmann::json::array({num(a[0]), num(a[1]), num(a[2])});
  };
  return {{"scenario", r.scenario},
          {"order", r.order},
          {"xi", num(r.xi)},
          {"n_in", num(r.n_in)},
          {"phi", num(r.phi)},
          {"beta", num(r.beta)},
          {"theta", triple(r.theta)},
          {"S", num(r.S)},
          {"var_u", num(r.var_u)},
          {"var_v", num(r.var_v)},
          {"f_p", num(r.f_p)},
          {"f_s", num(r.f_s)},
          {"verdict", r.verdict},
          {"gain", triple(r.gain)},
          {"truncation_diagnostic", num(r.truncation_diagnostic)},
          {"var_p", triple(r.var_p)},
          {"var_q", triple(r.var_q)}};
}

void write_json(std::ostream& out, const std::vector<SweepRow>& rows) {
  nlohmann::json doc;
  doc["schema"] = "triphoton-json v1";
  doc["rows"] = nlohmann::json::array();
  for (const SweepRow& r : rows) {
    check_identity(r);
    doc["rows"].push_back(to_json(r));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace triphoton::sweep
