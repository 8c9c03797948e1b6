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

// Internal CSV helpers. Numeric output uses %.17g so that doubles survive a
// write/read round trip bit-for-bit.

#ifndef SWARMSLING_CSV_UTIL_HPP
#define SWARMSLING_CSV_UTIL_HPP

#include <cstdio>
#include <string>
#include <vector>

namespace swarmsling::detail {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// Splits one line on ',' without any quoting rules (the formats written by
// this library never need them).
std::vector<std::string> split_csv_line(const std::string& line);

// Reads a whole numeric CSV file (header line + double-valued rows). Every
// row must have exactly as many fields as the header. Throws
// std::runtime_error naming the file and row on any malformed content.
CsvTable read_numeric_csv(const std::string& path);

// Appends one row of %.17g-formatted values to an open stream.
void write_csv_row(std::FILE* f, const double* values, int count);

}  // namespace swarmsling::detail

#endif  // SWARMSLING_CSV_UTIL_HPP
