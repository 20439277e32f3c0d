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

#include "sqfree/tables.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "sqfree/errors.hpp"

namespace sqfree {

namespace {

using nlohmann::ordered_json;

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c != '"') {
        out.back() += c;
      } else if (i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else {
        quoted = false;
      }
    } else if (c == '"' && out.back().empty()) {
      quoted = true;
    } else if (c == sep) {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  if (quoted) throw InvalidArgument("unterminated quoted cell");
  return out;
}

std::string quote(const std::string& cell, char sep) {
  if (cell.find(sep) == std::string::npos && cell.find('"') == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string render_delimited(const Table& t, char sep) {
  std::string out;
  auto put_row = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += sep;
      out += quote(cells[i], sep);
    }
    out += '\n';
  };
  put_row(t.columns);
  for (const auto& row : t.rows) put_row(row);
  return out;
}

Table parse_delimited(std::string_view text, char sep) {
  Table t;
  bool header = true;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    auto cells = split(line, sep);
    if (header) {
      t.columns = std::move(cells);
      header = false;
    } else {
      if (cells.size() != t.columns.size()) {
        throw InvalidArgument("table row has " + std::to_string(cells.size()) + " cells, expected " +
                              std::to_string(t.columns.size()));
      }
      t.rows.push_back(std::move(cells));
    }
  }
  if (header) throw InvalidArgument("table has no header");
  return t;
}

std::string render_json(const Table& t) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      const std::string& cell = row[i];
      ordered_json& v = obj[t.columns[i]];
      if (cell.empty()) {
        v = nullptr;
        continue;
      }
      switch (column_kind(t.columns[i])) {
        case ColumnKind::integer: v = std::stoll(cell); break;
        case ColumnKind::count:
        case ColumnKind::text: v = cell; break;
        case ColumnKind::decimal: v = std::stod(cell); break;
      }
    }
    rows.push_back(std::move(obj));
  }
  ordered_json doc = {{"columns", t.columns}, {"rows", std::move(rows)}};
  return doc.dump(2) + "\n";
}

Table parse_json(std::string_view text) {
  Table t;
  try {
    const ordered_json doc = ordered_json::parse(text);
    t.columns = doc.at("columns").get<std::vector<std::string>>();
    for (const auto& obj : doc.at("rows")) {
      std::vector<std::string> row;
      for (const std::string& name : t.columns) {
        const ordered_json& v = obj.at(name);
        if (v.is_null()) {
          row.emplace_back();
        } else if (v.is_string()) {
          row.push_back(v.get<std::string>());
        } else if (v.is_number_integer()) {
          row.push_back(std::to_string(v.get<long long>()));
        } else if (v.is_number()) {
          row.push_back(format_decimal(v.get<double>()));
        } else {
          throw InvalidArgument("unexpected JSON cell in column " + name);
        }
      }
      t.rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed JSON table: ") + e.what());
  }
  return t;
}

void require_from_zero(std::span<const CountRecord> records) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].n != i) throw InvalidArgument("count records must be consecutive from n = 0");
  }
}

}  // namespace

std::string_view to_string(TableFormat f) {
  switch (f) {
    case TableFormat::csv: return "csv";
    case TableFormat::tsv: return "tsv";
    case TableFormat::json: return "json";
  }
  return "?";
}

TableFormat parse_table_format(std::string_view s) {
  if (s == "csv") return TableFormat::csv;
  if (s == "tsv") return TableFormat::tsv;
  if (s == "json") return TableFormat::json;
  throw InvalidArgument("unknown output format '" + std::string(s) + "'");
}

ColumnKind column_kind(std::string_view name) {
  for (std::string_view s : {"n", "x", "k", "n_max", "degree", "remainder_degree", "fit_lo", "fit_hi"}) {
    if (name == s) return ColumnKind::integer;
  }
  if (name == "omega" || name == "psi" || name.starts_with("ext")) return ColumnKind::count;
  for (std::string_view s : {"coefficients", "expanded", "factored", "remainder"}) {
    if (name == s) return ColumnKind::text;
  }
  return ColumnKind::decimal;
}

std::string format_decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.8f", v);
  // Avoid "-0.00000000".
  if (std::string_view(buf) == "-0.00000000") return "0.00000000";
  return buf;
}

std::string render_table(const Table& t, TableFormat f) {
  switch (f) {
    case TableFormat::csv: return render_delimited(t, ',');
    case TableFormat::tsv: return render_delimited(t, '\t');
    case TableFormat::json: return render_json(t);
  }
  return {};
}

Table parse_table(std::string_view text, TableFormat f) {
  switch (f) {
    case TableFormat::csv: return parse_delimited(text, ',');
    case TableFormat::tsv: return parse_delimited(text, '\t');
    case TableFormat::json: return parse_json(text);
  }
  return {};
}

Table count_table(std::span<const CountRecord> records) {
  require_from_zero(records);
  Table t;
  t.columns = {"n", "omega", "log_ratio", "upper_j2"};
  const auto ratios = ratio_estimates(records);
  const auto upper = upper_bound_series(records, 2);
  for (std::size_t n = 1; n < records.size(); ++n) {
    std::vector<std::string> row{std::to_string(n), to_string(records[n].total), "", ""};
    if (n >= 2 && ratios[n]) row[2] = format_decimal(*ratios[n]);
    if (upper[n]) row[3] = format_decimal(*upper[n]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table class_table(std::span<const CountRecord> records) {
  require_from_zero(records);
  if (records.empty()) throw InvalidArgument("no records");
  const unsigned x = records.front().x;
  Table t;
  t.columns = {"n"};
  for (unsigned k = 0; k < x; ++k) t.columns.push_back("ext" + std::to_string(k));
  for (unsigned k = 0; k < x; ++k) t.columns.push_back("ratio" + std::to_string(k));
  const ExtensionRatios ratios = extension_ratios(records);
  for (std::size_t n = 1; n < records.size(); ++n) {
    const std::vector<Count>& ext = *records[n].ext;
    std::vector<std::string> row{std::to_string(n)};
    for (unsigned k = 0; k < x; ++k) row.push_back(to_string(ext[k]));
    for (unsigned k = 0; k < x; ++k) {
      row.push_back(ratios.ratios[n].empty() ? format_decimal(0.0) : format_decimal(ratios.ratios[n][k]));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table bounds_table(std::span<const BoundsReport> reports) {
  Table t;
  t.columns = {"x", "n_max", "lower", "estimate", "upper", "log_xm1", "s_tilde"};
  for (const BoundsReport& r : reports) {
    t.rows.push_back({std::to_string(r.x), std::to_string(r.n_max), format_decimal(r.lower_bound),
                      format_decimal(r.estimate), format_decimal(r.upper_bound),
                      format_decimal(r.log_x_minus_1), format_decimal(r.s_tilde)});
  }
  return t;
}

}  // namespace sqfree
