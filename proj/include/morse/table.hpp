#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace morse {

using Cell = std::variant<double, std::string>;

/// Column-named table; doubles are written with 17 significant digits so a
/// written CSV parses back to identical values.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  bool operator==(const Table& o) const = default;
};

/// CSV with a header line; `comments` are emitted first as '# ' lines.
void write_csv(std::ostream& os, const Table& t, const std::vector<std::string>& comments = {});
/// Inverse of write_csv; '#' lines and blank lines are skipped.
Table read_csv(std::istream& is);

/// JSON array of objects keyed by column name.
std::string to_json(const Table& t, int indent = 2);

std::string format_double(double v);

}  // namespace morse
