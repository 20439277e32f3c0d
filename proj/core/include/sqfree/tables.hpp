// Copyright 2026 The sqfree Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SQFREE_TABLES_HPP_
#define SQFREE_TABLES_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqfree/counting.hpp"
#include "sqfree/entropy.hpp"

namespace sqfree {

enum class TableFormat { csv, tsv, json };

std::string_view to_string(TableFormat f);
TableFormat parse_table_format(std::string_view s);  // csv | tsv | json

// integer: small JSON number; count: exact, a JSON string; decimal: 8 fixed
// decimals, a JSON number; text: verbatim, a JSON string.
enum class ColumnKind { integer, count, decimal, text };

// Kind implied by a column name. Unknown names are decimal.
ColumnKind column_kind(std::string_view name);

// Cells are kept as text; an empty cell is a blank (JSON null). CSV cells
// containing the separator or a quote are quoted, RFC 4180 style.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const Table&, const Table&) = default;
};

std::string format_decimal(double v);  // "%.8f"

std::string render_table(const Table& t, TableFormat f);

// Inverse of render_table. Throws InvalidArgument on malformed input.
Table parse_table(std::string_view text, TableFormat f);

// n, omega, log_ratio, upper_j2 for n = 1..n_max. Records must run from
// n = 0; the log-ratio is blank at n = 1 and the bound at n <= 2.
Table count_table(std::span<const CountRecord> records);

// n, ext0..ext<x-1>, ratio0..ratio<x-1> for n = 1..n_max (classified records).
Table class_table(std::span<const CountRecord> records);

// x, n_max, lower, estimate, upper, log_xm1, s_tilde.
Table bounds_table(std::span<const BoundsReport> reports);

}  // namespace sqfree

#endif  // SQFREE_TABLES_HPP_
