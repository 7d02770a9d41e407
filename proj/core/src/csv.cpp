#include "horokit/csv.hpp"

#include <cstdio>
#include <fstream>

namespace horokit {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string csv_to_string(const CsvTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += table.header[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (std::holds_alternative<long long>(row[i])) {
        out += std::to_string(std::get<long long>(row[i]));
      } else if (std::holds_alternative<double>(row[i])) {
        out += format_double(std::get<double>(row[i]));
      } else {
        out += std::get<std::string>(row[i]);
      }
    }
    out += '\n';
  }
  return out;
}

void emit_csv(const CsvTable& table, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw error(errc::io_error, "cannot open for writing: " + path);
  std::string body = csv_to_string(table);
  f.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!f) throw error(errc::io_error, "write failed: " + path);
}

}  // namespace horokit
