#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "horokit/errors.hpp"

namespace horokit {

using CsvCell = std::variant<long long, double, std::string>;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<CsvCell>> rows;
};

// Deterministic byte output: integers as-is, doubles with 12 significant
// digits (%.12g), '\n' line endings.
std::string csv_to_string(const CsvTable& table);

// Writes csv_to_string(table); throws errc::io_error on failure.
void emit_csv(const CsvTable& table, const std::string& path);

// Shared numeric formatting (%.12g), also used by the SVG writer.
std::string format_double(double v);

}  // namespace horokit
