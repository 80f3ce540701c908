#include "csdelay/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "csdelay/error.hpp"

namespace csdelay {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? std::string{} : cell.substr(b, e - b + 1));
  }
  return out;
}

bool parse_number(const std::string& s, double& v) {
  if (s.empty()) return false;
  std::size_t used = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == s.size();
}

}  // namespace

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
  if (header_.empty()) throw InvalidArgument("csv: header must not be empty");
}

void CsvTable::add_row(const std::vector<double>& row) {
  if (row.size() != header_.size()) throw InvalidArgument("csv: row width does not match header");
  rows_.push_back(row);
}

std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

std::string CsvTable::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (i) out += ',';
    out += header_[i];
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_value(row[i]);
    }
    out += '\n';
  }
  return out;
}

void CsvTable::write(const std::filesystem::path& path) const {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path.string() + " for writing");
  f << to_string();
  if (!f) throw Error("failed writing " + path.string());
}

CsvData read_csv(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path.string());
  CsvData data;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(f, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    const auto cells = split(line);
    std::vector<double> values(cells.size());
    bool numeric = true;
    for (std::size_t i = 0; i < cells.size(); ++i) numeric = numeric && parse_number(cells[i], values[i]);
    if (!numeric) {
      if (!first) throw InvalidArgument(path.string() + ":" + std::to_string(line_no) + ": non-numeric value");
      data.header = cells;
      first = false;
      continue;
    }
    if (data.columns.empty()) data.columns.resize(values.size());
    if (values.size() != data.columns.size()) {
      throw InvalidArgument(path.string() + ":" + std::to_string(line_no) + ": inconsistent column count");
    }
    for (std::size_t i = 0; i < values.size(); ++i) data.columns[i].push_back(values[i]);
    first = false;
  }
  return data;
}

}  // namespace csdelay
