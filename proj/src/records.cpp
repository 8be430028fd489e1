#include "mmes/records.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace mmes {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("Table::add_row: expected " + std::to_string(columns.size()) + " cells, got " +
                                std::to_string(row.size()));
  rows.push_back(std::move(row));
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) out += (c ? "," : "") + table.columns[c];
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      if (const double* v = std::get_if<double>(&row[c]))
        out += format_number(*v);
      else
        out += std::get<std::string>(row[c]);
    }
    out += '\n';
  }
  for (const auto& [key, value] : table.summary) out += "# " + key + "=" + value + '\n';
  return out;
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (const double* v = std::get_if<double>(&row[c])) {
        // JSON has no non-finite numbers; keep them as the CSV spelling.
        if (std::isfinite(*v))
          obj[table.columns[c]] = *v;
        else
          obj[table.columns[c]] = format_number(*v);
      } else {
        obj[table.columns[c]] = std::get<std::string>(row[c]);
      }
    }
    rows.push_back(std::move(obj));
  }
  nlohmann::ordered_json doc;
  doc["columns"] = table.columns;
  doc["rows"] = std::move(rows);
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.summary) summary[key] = value;
  doc["summary"] = std::move(summary);
  return doc.dump(2) + '\n';
}

void write_text(const std::filesystem::path& path, const std::string& contents) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

void write_csv(const std::filesystem::path& path, const Table& table) { write_text(path, to_csv(table)); }

void write_json(const std::filesystem::path& path, const Table& table) { write_text(path, to_json(table)); }

}  // namespace mmes
