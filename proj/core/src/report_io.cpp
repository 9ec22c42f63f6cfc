#include "fup/report_io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "json.hpp"

namespace fup {

namespace {

nlohmann::ordered_json to_json(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  if (const auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return format_double(*d);
    return *d;
  }
  return std::get<std::string>(c);
}

nlohmann::ordered_json to_json(const std::vector<Field>& fields) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [key, value] : fields) obj[key] = to_json(value);
  return obj;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_cell(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  return std::get<std::string>(c);
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t j = 0; j < table.columns.size(); ++j) {
    out << (j ? "," : "") << csv_escape(table.columns[j]);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << csv_escape(format_cell(row[j]));
    out << '\n';
  }
}

void write_json(std::ostream& out, const Report& report) {
  nlohmann::ordered_json doc;
  doc["command"] = report.command;
  doc["version"] = report.version;
  doc["config"] = to_json(report.config);
  doc["summary"] = to_json(report.summary);
  doc["columns"] = report.table.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : report.table.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const Cell& c : row) r.push_back(to_json(c));
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

Table spectrum_table(const Spectrum& s) {
  Table t{{"k", "lambda", "method", "n", "R", "alpha"}, {}};
  const std::string method(to_string(s.method));
  for (const SpectrumEntry& e : s.entries) {
    t.rows.push_back({e.k, e.lambda, method, std::int64_t{s.spec.depth()}, s.spec.dilation(), s.alpha});
  }
  return t;
}

Table sandwich_table(std::span<const SandwichReport> reports) {
  Table t{{"n", "R", "alpha", "norm", "envelope", "ratio"}, {}};
  for (const SandwichReport& r : reports) {
    for (const SandwichPoint& p : r.points) {
      t.rows.push_back({std::int64_t{p.n}, p.R, p.alpha, p.norm, p.envelope, p.ratio});
    }
  }
  return t;
}

Table scaling_table(const ScalingFit& fit) {
  Table t{{"lnR", "lnNorm"}, {}};
  for (const ScalingPoint& p : fit.points) t.rows.push_back({p.ln_R, p.ln_value});
  return t;
}

}  // namespace fup
