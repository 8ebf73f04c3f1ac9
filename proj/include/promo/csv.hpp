#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace promo::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a header column, or -1.
  int column(const std::string& name) const;
};

/// RFC-4180 style: quoted fields may contain commas, quotes ("" escape) and
/// newlines. Rows are required to match the header width.
Table read(std::istream& in);
Table read_file(const std::filesystem::path& path);

std::string escape(const std::string& field);
void write_row(std::ostream& out, const std::vector<std::string>& fields);

/// Shortest round-trip formatting for doubles ("%.17g" trimmed); keeps CSV
/// output byte-stable across runs.
std::string format_double(double v);

}  // namespace promo::csv
