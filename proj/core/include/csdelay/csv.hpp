#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace csdelay {

/// Comma-separated numeric table with a mandatory header row. Values are
/// printed as %.12e so that repeated runs are byte-identical.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  /// Throws InvalidArgument when the row width differs from the header.
  void add_row(const std::vector<double>& row);

  const std::vector<std::string>& header() const { return header_; }
  std::size_t rows() const { return rows_.size(); }

  std::string to_string() const;
  /// Creates parent directories as needed.
  void write(const std::filesystem::path& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<double>> rows_;
};

/// Formats one value in the table dialect; NaN is written as "nan".
std::string format_value(double v);

struct CsvData {
  std::vector<std::string> header;  // empty when the file has no header row
  std::vector<std::vector<double>> columns;
};

/// Reads a numeric CSV. A first line that does not parse as numbers is taken
/// as the header. Blank lines and lines starting with '#' are skipped.
CsvData read_csv(const std::filesystem::path& path);

}  // namespace csdelay
