// Copyright 2026 The swapurify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWAPURIFY_REPORT_HPP
#define SWAPURIFY_REPORT_HPP

/// \file
/// Tabular output for region scans and concurrence curves. Numbers are
/// written with 12 significant digits through std::to_chars, which ignores
/// the locale, so identical inputs give identical bytes.

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "swapurify/protocol.hpp"

namespace swapurify {

inline std::string format_number(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("refusing to format a non-finite value");
  if (x == 0.0) x = 0.0;  // drops the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  if (res.ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, res.ptr);
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row) {
    if (row.size() != columns.size()) throw std::invalid_argument("row width does not match header");
    rows.push_back(std::move(row));
  }
};

inline void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_number(row[c]);
    os << '\n';
  }
}

/// Scan rows in grid order with columns
/// axis1, axis2, C_initial, C_final, enhanced, branch_probability.
inline Table region_table(const RegionScan& scan) {
  Table t{{"axis1", "axis2", "C_initial", "C_final", "enhanced", "branch_probability"}, {}};
  t.rows.reserve(scan.points.size());
  for (const auto& pt : scan.points) {
    t.add_row({pt.x, pt.y, pt.c_initial, pt.c_final, pt.enhanced ? 1.0 : 0.0, pt.probability});
  }
  return t;
}

/// Evenly spaced samples of [lo, hi]; a single sample sits at lo.
inline std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 1) throw std::invalid_argument("need at least one sample");
  if (!(lo <= hi)) throw std::invalid_argument("sample range needs lo <= hi");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] =
        count == 1 ? lo
        : i == count - 1 ? hi
                         : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return out;
}

/// Concurrence of the noisy pair and of every round versus p:
/// p, C_rho_AB, C_round1, ..., C_roundN. Rounds after an aborted run read 0.
inline Table phi_curve(ProtocolConfig cfg, const std::vector<double>& ps,
                       const Numerics& numerics = {}) {
  Table t{{"p", "C_rho_AB"}, {}};
  for (int k = 1; k <= cfg.rounds; ++k) t.columns.push_back("C_round" + std::to_string(k));
  for (double p : ps) {
    cfg.p = p;
    const ProtocolRun run = run_protocol(cfg, numerics);
    std::vector<double> row{p, run.initial_concurrence};
    for (int k = 0; k < cfg.rounds; ++k) {
      const auto idx = static_cast<std::size_t>(k);
      row.push_back(run.ok() && idx < run.rounds.size() ? run.rounds[idx].concurrence : 0.0);
    }
    t.add_row(std::move(row));
  }
  return t;
}

/// chi family versus p: p, C_chi_AB, C_chi_AC (after the swap), C_chi_AC_weak
/// (after the weak step of cfg.weak_policy). Only the first round is used.
inline Table chi_curve(ProtocolConfig cfg, const std::vector<double>& ps,
                       const Numerics& numerics = {}) {
  Table t{{"p", "C_chi_AB", "C_chi_AC", "C_chi_AC_weak"}, {}};
  cfg.family = Family::Chi;
  cfg.rounds = 1;
  for (double p : ps) {
    cfg.p = p;
    const ProtocolRun run = run_protocol(cfg, numerics);
    const bool ok = run.ok() && !run.rounds.empty();
    t.add_row({p, run.initial_concurrence, ok ? run.rounds[0].swap_concurrence : 0.0,
               ok ? run.rounds[0].concurrence : 0.0});
  }
  return t;
}

}  // namespace swapurify

#endif  // SWAPURIFY_REPORT_HPP
