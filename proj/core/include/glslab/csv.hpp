/*
    Copyright (C) 2026 The glslab Authors

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

#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace glslab::csv {

// Locale-independent number formatting. Plain decimal for 1e-6 <= |v| < 1e6,
// scientific outside that band; 12 significant digits; "inf"/"nan" spelled out.
std::string format_number(double value);

// Quotes a field only when it contains a separator, quote or newline.
std::string escape_field(std::string_view field);

class Table {
 public:
  explicit Table(std::vector<std::string> header);

  Table& add_row(std::vector<std::string> cells);

  const std::vector<std::string>& header() const noexcept { return header_; }
  const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }

  std::string to_string() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace glslab::csv
