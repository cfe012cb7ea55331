#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace ptwell {

/// One output cell. Doubles are rendered with 15 significant digits and a
/// '.' decimal point in both serializations, so CSV and JSON carry
/// identical values.
using Cell = std::variant<std::int64_t, double, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// "%.15g" with the C locale, independent of the global locale.
std::string format_double(double v);

/// Header line + one line per row, comma separated, LF endings.
std::string to_csv(const Table& table);

/// Array of flat objects, one object per line, same field names as CSV.
std::string to_json(const Table& table);

} // namespace ptwell
