/*
 Copyright 2026 The Swarmsling Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

 https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
 */

#include "csv_util.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace swarmsling::detail {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

namespace {

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') {
    s.pop_back();
  }
  return s;
}

double parse_double(const std::string& field, const std::string& path,
                    std::size_t row) {
  const char* begin = field.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw std::runtime_error(path + ": row " + std::to_string(row) +
                             ": not a number: '" + field + "'");
  }
  return value;
}

}  // namespace

CsvTable read_numeric_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error(path + ": cannot open for reading");
  }
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error(path + ": empty file");
  }
  table.header = split_csv_line(strip_cr(line));
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    line = strip_cr(line);
    if (line.empty()) {
      continue;
    }
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != table.header.size()) {
      throw std::runtime_error(path + ": row " + std::to_string(row) + ": " +
                               std::to_string(fields.size()) + " fields, " +
                               "expected " +
                               std::to_string(table.header.size()));
    }
    std::vector<double> values(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) {
      values[i] = parse_double(fields[i], path, row);
    }
    table.rows.push_back(std::move(values));
  }
  return table;
}

void write_csv_row(std::FILE* f, const double* values, int count) {
  for (int i = 0; i < count; ++i) {
    std::fprintf(f, i == 0 ? "%.17g" : ",%.17g", values[i]);
  }
  std::fputc('\n', f);
}

}  // namespace swarmsling::detail
