#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mmes {

using Cell = std::variant<double, std::string>;

// A header plus rows of cells, with optional summary entries written as
// trailing "# key=value" lines in CSV and a "summary" object in JSON.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> summary;

  void add_row(std::vector<Cell> row);
};

// Raised for any failure to create or write an output file.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 17 significant digits; "nan", "inf", "-inf" for non-finite values.
std::string format_number(double value);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);

void write_text(const std::filesystem::path& path, const std::string& contents);
void write_csv(const std::filesystem::path& path, const Table& table);
void write_json(const std::filesystem::path& path, const Table& table);

}  // namespace mmes
