#pragma once

// Tabular results and their CSV / JSON serializations. CSV has a header row
// and locale-independent shortest round-trip numbers; JSON adds the tool
// version, the command, a config echo and summary fields.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fup/bounds.hpp"
#include "fup/eigen.hpp"

namespace fup {

using Cell = std::variant<std::int64_t, double, std::string>;
using Field = std::pair<std::string, Cell>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Report {
  std::string command;
  std::string version;
  std::vector<Field> config;
  Table table;
  std::vector<Field> summary;
};

/// Shortest decimal that round-trips, "." separator, no locale.
[[nodiscard]] std::string format_double(double x);
[[nodiscard]] std::string format_cell(const Cell& c);

void write_csv(std::ostream& out, const Table& table);
void write_json(std::ostream& out, const Report& report);

/// Columns k, lambda, method, n, R, alpha.
[[nodiscard]] Table spectrum_table(const Spectrum& s);

/// Columns n, R, alpha, norm, envelope, ratio.
[[nodiscard]] Table sandwich_table(std::span<const SandwichReport> reports);

/// Columns lnR, lnNorm.
[[nodiscard]] Table scaling_table(const ScalingFit& fit);

}  // namespace fup
