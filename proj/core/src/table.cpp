#include "relqm/table.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace relqm {

std::string format_number(double x, int precision) {
  if (precision < 1) precision = 1;
  if (precision > 17) precision = 17;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, x);
  return buf;
}

void Table::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns.size())
    throw std::invalid_argument("table: row width does not match header");
  rows.push_back(std::move(cells));
}

void Table::add_numeric_row(const std::vector<double>& values, int precision) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format_number(v, precision));
  add_row(std::move(cells));
}

void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) os << ',';
    os << table.columns[c];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      os << row[c];
    }
    os << '\n';
  }
}

std::string to_csv(const Table& table) {
  std::ostringstream ss;
  write_csv(ss, table);
  return ss.str();
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cell);
      cell.clear();
    } else if (ch != '\r') {
      cell.push_back(ch);
    }
  }
  out.push_back(cell);
  return out;
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

} // namespace

Table read_csv(std::istream& is) {
  Table t;
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("csv: empty input");
  t.columns = split_line(line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto cells = split_line(line);
    if (cells.size() != t.columns.size())
      throw std::runtime_error("csv: ragged row");
    t.rows.push_back(std::move(cells));
  }
  return t;
}

bool tables_match(const Table& a, const Table& b, double tol, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (a.columns != b.columns) return fail("headers differ");
  if (a.rows.size() != b.rows.size()) return fail("row counts differ");
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    for (std::size_t c = 0; c < a.columns.size(); ++c) {
      const std::string& x = a.rows[i][c];
      const std::string& y = b.rows[i][c];
      double dx, dy;
      if (parse_double(x, dx) && parse_double(y, dy)) {
        const double scale = std::max({1.0, std::abs(dx), std::abs(dy)});
        if (std::abs(dx - dy) > tol * scale)
          return fail("row " + std::to_string(i + 1) + " column " + a.columns[c] +
                      ": " + x + " vs " + y);
      } else if (x != y) {
        return fail("row " + std::to_string(i + 1) + " column " + a.columns[c] +
                    ": '" + x + "' vs '" + y + "'");
      }
    }
  }
  return true;
}

} // namespace relqm
