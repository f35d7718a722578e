#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relqm {

/// Deterministic CSV emission: snake_case header, rows in grid order,
/// numbers in shortest decimal at a configured significant-digit count,
/// "\n" line endings. Byte-identical output for identical inputs.

std::string format_number(double x, int precision);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> cells);
  void add_numeric_row(const std::vector<double>& values, int precision);
};

void write_csv(std::ostream& os, const Table& table);
std::string to_csv(const Table& table);

/// Parser for the files this project writes (no quoting or escapes).
Table read_csv(std::istream& is);

/// Golden-file comparator: headers must match exactly; numeric cells must
/// agree within tol (absolute or relative), non-numeric cells exactly.
/// On mismatch returns false and, when why != nullptr, a one-line reason.
bool tables_match(const Table& a, const Table& b, double tol, std::string* why = nullptr);

} // namespace relqm
