#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace renq {

using Cell = std::variant<double, std::string>;

struct Column {
  std::string name;
  std::string unit;  // "1" for dimensionless, "text" / "bool" for non-numeric cells
};

struct ResultTable {
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> metadata;  // insertion order preserved

  std::size_t column(const std::string& name) const;  // InputError if absent
  double number(std::size_t row, const std::string& name) const;
  void add_row(std::vector<Cell> row);  // InputError on width mismatch

  // '#'-prefixed metadata lines, then the name row, the unit row and the data rows
  std::string to_csv() const;
  // {"metadata": {...}, "columns": [{"name","unit"}], "rows": [[...]]}; non-finite numbers become null
  std::string to_record() const;
};

// %.17g, "inf"/"-inf"/"nan" for non-finite values
std::string format_number(double v);

}  // namespace renq
