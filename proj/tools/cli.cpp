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

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "sqfree/cache.hpp"
#include "sqfree/combinatorics.hpp"
#include "sqfree/counting.hpp"
#include "sqfree/entropy.hpp"
#include "sqfree/errors.hpp"
#include "sqfree/tables.hpp"

namespace sqfree::cli {

namespace {

struct RunConfig {
  unsigned alphabet = 3;
  unsigned max_length = 30;
  unsigned workers = 1;
  unsigned split_depth = 6;
  std::string symmetry = "auto";
  std::string format = "csv";
  std::string cache_path;
  std::string out_path;
};

// Census access shared by all commands: goes through the cache file when
// one is configured and writes it back if anything new was computed.
class Session {
 public:
  explicit Session(const RunConfig& cfg) : cfg_(cfg) {
    if (!cfg_.cache_path.empty() && std::filesystem::exists(cfg_.cache_path)) {
      cache_ = checkpoint_load(cfg_.cache_path);
    } else {
      cache_ = CountCache(std::string(engine_version()), options_for(3).symmetry);
    }
    loaded_size_ = cache_.size();
  }

  CountOptions options_for(unsigned x) const {
    CountOptions o;
    o.workers = cfg_.workers;
    o.split_depth = cfg_.split_depth;
    if (cfg_.symmetry == "auto") {
      o.symmetry = x >= 4 ? SymmetryMode::first_occurrence : SymmetryMode::fix_first_two;
    } else {
      o.symmetry = parse_symmetry_mode(cfg_.symmetry);
    }
    return o;
  }

  std::vector<CountRecord> census(unsigned x, unsigned n_max, bool classified) {
    if (cfg_.cache_path.empty()) {
      return classified ? classify_up_to(x, n_max, options_for(x)) : count_up_to(x, n_max, options_for(x));
    }
    auto records = cached_census(cache_, x, n_max, classified, options_for(x));
    // A classified cache can serve count requests; hand back plain totals
    // so the output does not depend on what the cache happened to hold.
    if (!classified) {
      for (auto& r : records) r.ext.reset();
    }
    return records;
  }

  void finish() {
    if (!cfg_.cache_path.empty() && cache_.size() != loaded_size_) {
      checkpoint_save(cache_, cfg_.cache_path);
    }
  }

 private:
  RunConfig cfg_;
  CountCache cache_;
  std::size_t loaded_size_ = 0;
};

Table psi_rows(unsigned n, unsigned x, const CountOptions& options) {
  const auto omega = omega_grid(n, x, options);
  const PsiTable psi = psi_table(omega);
  Table t;
  t.columns = {"n", "k", "psi"};
  for (unsigned k = 0; k <= x; ++k) {
    t.rows.push_back({std::to_string(n), std::to_string(k), psi.at(n, k).str()});
  }
  return t;
}

Table poly_rows(unsigned n, bool show_remainder, const CountOptions& options) {
  const unsigned top = show_remainder ? n + 1 : n;
  const auto omega = omega_grid(top, top, options);
  std::vector<IntegerPolynomial> p(top + 1, IntegerPolynomial::constant(1));
  for (unsigned m = 1; m <= top; ++m) {
    p[m] = recover_polynomial(m, std::span<const BigInt>(omega[m]).first(m + 1));
  }
  Table t;
  t.columns = {"n", "degree", "coefficients", "expanded", "factored"};
  if (show_remainder) {
    t.columns.push_back("remainder");
    t.columns.push_back("remainder_degree");
  }
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<std::string> row{std::to_string(m), std::to_string(p[m].degree()), p[m].to_json(),
                                 p[m].to_string(), p[m].factored()};
    if (show_remainder) {
      if (m > 2) {
        const IntegerPolynomial r = recurrence_remainder(p[m - 1], p[m], p[m + 1], m);
        row.push_back(r.to_string());
        row.push_back(r.is_zero() ? "" : std::to_string(r.degree()));
      } else {
        row.emplace_back();
        row.emplace_back();
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table entropy_row(unsigned x, std::span<const CountRecord> records, std::optional<unsigned> fit_lo,
                  std::optional<unsigned> fit_hi) {
  const unsigned n_max = records.back().n;
  Table t;
  t.columns = {"x",        "n_max",       "estimate",      "upper_j0", "upper_j1",
               "upper_j2", "fit_epsilon", "fit_intercept", "fit_lo",   "fit_hi",
               "fit_residual"};
  std::vector<std::string> row{std::to_string(x), std::to_string(n_max)};
  row.push_back(n_max >= 1 ? format_decimal(point_estimate(records)) : "");
  for (unsigned j = 0; j <= 2; ++j) {
    row.push_back(n_max > j ? format_decimal(upper_bound(records, j).value) : "");
  }
  auto [lo, hi] = default_fit_window(n_max);
  if (fit_lo) lo = *fit_lo;
  if (fit_hi) hi = *fit_hi;
  const FitResult fit = fit_linear(records, lo, hi);
  row.push_back(format_decimal(fit.epsilon));
  row.push_back(format_decimal(fit.intercept));
  row.push_back(std::to_string(fit.window_lo));
  row.push_back(std::to_string(fit.window_hi));
  row.push_back(format_decimal(fit.residual));
  t.rows.push_back(std::move(row));
  return t;
}

void emit(const Table& table, const RunConfig& cfg, std::ostream& out) {
  const std::string text = render_table(table, parse_table_format(cfg.format));
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
  file << text;
  if (!file.flush()) throw IntegrityError("cannot write " + cfg.out_path);
}

}  // namespace

unsigned bounds_table_depth(unsigned x) {
  static const std::map<unsigned, unsigned> depth{{3, 90},  {4, 26},  {5, 21}, {6, 18},
                                                  {7, 16},  {8, 16},  {9, 15}, {10, 14},
                                                  {11, 12}, {12, 12}};
  const auto it = depth.find(x);
  if (it == depth.end()) throw InvalidArgument("bounds table covers x = 3..12");
  return it->second;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts and entropy bounds for square-free words", "sqfree"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SQFREE_CACHE")) cfg.cache_path = env;

  app.add_option("--alphabet", cfg.alphabet, "Alphabet size x")->check(CLI::Range(1u, 256u));
  auto* max_len_opt =
      app.add_option("--max-len", cfg.max_length, "Longest word length n_max")->check(CLI::Range(0u, kMaxWordLength));
  app.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--split-depth", cfg.split_depth, "Depth at which the search is split into tasks");
  app.add_option("--symmetry", cfg.symmetry, "auto, none, fix-first-two or first-occurrence")
      ->check(CLI::IsMember({"auto", "none", "fix-first-two", "first-occurrence"}));
  app.add_option("--cache", cfg.cache_path, "Count cache file (default $SQFREE_CACHE)");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json", "tsv"}));
  app.add_option("--out", cfg.out_path, "Write output here instead of stdout");

  auto* count_cmd = app.add_subcommand("count", "Square-free word counts with entropy columns");
  auto* classify_cmd = app.add_subcommand("classify", "Counts by number of square-free extensions");

  unsigned psi_n = 0, psi_x = 0;
  auto* psi_cmd = app.add_subcommand("psi", "Words using exactly k of the letters");
  auto* psi_n_opt = psi_cmd->add_option("--n", psi_n, "Word length")->check(CLI::Range(0u, kMaxWordLength));
  auto* psi_x_opt = psi_cmd->add_option("--x", psi_x, "Largest number of letters");

  unsigned poly_n = 0, poly_cap = 9;
  bool show_remainder = false;
  auto* poly_cmd = app.add_subcommand("poly", "Counting polynomials in the alphabet size");
  poly_cmd->add_option("--n", poly_n, "Degree")->required()->check(CLI::PositiveNumber);
  poly_cmd->add_flag("--show-remainder", show_remainder, "Also print the recurrence remainder");
  poly_cmd->add_option("--max-poly-n", poly_cap, "Refuse degrees above this");

  std::optional<unsigned> fit_lo, fit_hi;
  auto* entropy_cmd = app.add_subcommand("entropy", "Entropy estimates and least-squares fit");
  entropy_cmd->add_option("--fit-lo", fit_lo, "First length in the fit window");
  entropy_cmd->add_option("--fit-hi", fit_hi, "Last length in the fit window");

  auto* bounds_cmd = app.add_subcommand("bounds", "Lower bound, estimate and upper bound");

  unsigned table_id = 1;
  std::optional<unsigned> table_row;
  auto* table_cmd = app.add_subcommand("table", "Reproduce a full table");
  table_cmd->add_option("--id", table_id, "1: counts, 2: extension classes, 3: bounds")
      ->required()
      ->check(CLI::Range(1u, 3u));
  table_cmd->add_option("--row", table_row, "Only this alphabet size (table 3)");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    Session session(cfg);
    const unsigned x = cfg.alphabet;
    Table table;
    if (count_cmd->parsed()) {
      table = count_table(session.census(x, cfg.max_length, false));
    } else if (classify_cmd->parsed()) {
      table = class_table(session.census(x, cfg.max_length, true));
    } else if (psi_cmd->parsed()) {
      const unsigned n = psi_n_opt->count() ? psi_n : cfg.max_length;
      table = psi_rows(n, psi_x_opt->count() ? psi_x : x, session.options_for(x));
    } else if (poly_cmd->parsed()) {
      if (poly_n > poly_cap) {
        throw InvalidArgument("--n " + std::to_string(poly_n) + " exceeds --max-poly-n " + std::to_string(poly_cap));
      }
      table = poly_rows(poly_n, show_remainder, session.options_for(x));
    } else if (entropy_cmd->parsed()) {
      table = entropy_row(x, session.census(x, cfg.max_length, false), fit_lo, fit_hi);
    } else if (bounds_cmd->parsed()) {
      const BoundsReport rep = bounds_report(x, session.census(x, cfg.max_length, false));
      table = bounds_table(std::span(&rep, 1));
    } else if (table_cmd->parsed()) {
      if (table_id == 1) {
        table = count_table(session.census(x, cfg.max_length, false));
      } else if (table_id == 2) {
        table = class_table(session.census(x, cfg.max_length, true));
      } else {
        std::vector<BoundsReport> reports;
        for (unsigned row = 3; row <= 12; ++row) {
          if (table_row && *table_row != row) continue;
          const unsigned n_max = max_len_opt->count() ? cfg.max_length : bounds_table_depth(row);
          reports.push_back(bounds_report(row, session.census(row, n_max, false)));
        }
        if (reports.empty()) throw InvalidArgument("--row must be in 3..12");
        table = bounds_table(reports);
      }
    }
    session.finish();
    emit(table, cfg, out);
    return kOk;
  } catch (const InvalidArgument& e) {
    err << "sqfree: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "sqfree: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace sqfree::cli
