#include "ptwell/output.hpp"

#include <cstdio>

namespace ptwell {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

namespace {

std::string render(const Cell& cell, bool json) {
  switch (cell.index()) {
    case 0: return std::to_string(std::get<std::int64_t>(cell));
    case 1: return format_double(std::get<double>(cell));
    case 2: return std::get<bool>(cell) ? "true" : "false";
    default: {
      const std::string& s = std::get<std::string>(cell);
      return json ? "\"" + s + "\"" : s;
    }
  }
}

} // namespace

std::string to_csv(const Table& table) {
  std::string out;
  for (size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += render(row[c], false);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table) {
  std::string out = "[\n";
  for (size_t r = 0; r < table.rows.size(); ++r) {
    out += "{";
    for (size_t c = 0; c < table.rows[r].size(); ++c) {
      if (c) out += ',';
      out += "\"" + table.columns[c] + "\":" + render(table.rows[r][c], true);
    }
    out += (r + 1 < table.rows.size()) ? "},\n" : "}\n";
  }
  out += "]\n";
  return out;
}

} // namespace ptwell
