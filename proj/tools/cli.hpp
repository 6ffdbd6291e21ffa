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

#ifndef SWAPURIFY_TOOLS_CLI_HPP
#define SWAPURIFY_TOOLS_CLI_HPP

// Command-line front end. Lives in a header so tests can drive it in-process.
//
// Exit codes: 0 ok, 1 usage or invalid parameters, 2 I/O, 3 failed
// verification (or an uncertified numerical result).

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "swapurify/swapurify.hpp"

namespace swapurify::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kVerifyFailed = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Preset {
  std::string subcommand;
  std::vector<std::string> flags;
};

/// Figure presets. Each is nothing more than the flag list shown here.
inline const std::map<std::string, Preset>& presets() {
  static const std::map<std::string, Preset> table = {
      {"fig1",
       {"scan",
        {"--family", "phi", "--rounds", "1", "--accept", "psi", "--grid", "200x200", "--axis1",
         "p:0:1", "--axis2", "a:0:1", "--criterion", "chain"}}},
      {"fig2",
       {"scan",
        {"--family", "phi-asym", "--p", "0.1", "--rounds", "1", "--accept", "psi", "--grid",
         "200x200", "--axis1", "a:0:1", "--axis2", "a-prime:0:1", "--criterion", "chain"}}},
      {"fig3n2",
       {"scan",
        {"--family", "phi", "--rounds", "2", "--b", "0.22", "--weak-policy", "pp", "--accept",
         "psi", "--grid", "200x200", "--axis1", "p:0:1", "--axis2", "a:0:1", "--criterion",
         "final"}}},
      {"fig3n3",
       {"scan",
        {"--family", "phi", "--rounds", "3", "--b", "0.22", "--weak-policy", "pp", "--accept",
         "psi", "--grid", "200x200", "--axis1", "p:0:1", "--axis2", "a:0:1", "--criterion",
         "final"}}},
      {"fig4",
       {"curve",
        {"--family", "phi", "--a", "0.3", "--b", "0.22", "--rounds", "3", "--weak-policy", "pp",
         "--accept", "psi", "--grid", "200", "--p-range", "0:0.99"}}},
      {"fig5a",
       {"scan",
        {"--family", "chi", "--rounds", "1", "--weak-policy", "none", "--accept", "psi", "--grid",
         "200x200", "--axis1", "p:0:1", "--axis2", "A:0:1", "--criterion", "chain"}}},
      {"fig5b",
       {"scan",
        {"--family", "chi", "--rounds", "1", "--b", "0.25", "--weak-policy", "pp", "--accept",
         "psi", "--grid", "200x200", "--axis1", "p:0:1", "--axis2", "A:0:1", "--criterion",
         "chain"}}},
      {"fig6",
       {"curve",
        {"--family", "chi", "--A", "0.9", "--b", "0.25", "--weak-policy", "pp", "--accept", "psi",
         "--grid", "200", "--p-range", "0:0.99"}}},
  };
  return table;
}

/// Replaces `--preset NAME` by the preset's flags, placed right after the
/// subcommand so that flags given on the command line take precedence.
inline std::vector<std::string> expand_presets(std::vector<std::string> args) {
  std::optional<std::string> name;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--preset") {
      if (i + 1 >= args.size()) throw UsageError("--preset needs a value");
      if (name) throw UsageError("--preset given more than once");
      name = args[++i];
    } else if (args[i].rfind("--preset=", 0) == 0) {
      if (name) throw UsageError("--preset given more than once");
      name = args[i].substr(9);
    } else {
      kept.push_back(args[i]);
    }
  }
  if (!name) return kept;
  const auto it = presets().find(*name);
  if (it == presets().end()) throw UsageError("unknown preset '" + *name + "'");
  const auto sub = std::find(kept.begin(), kept.end(), it->second.subcommand);
  if (sub == kept.end()) {
    throw UsageError("preset '" + *name + "' belongs to the '" + it->second.subcommand +
                     "' subcommand");
  }
  kept.insert(sub + 1, it->second.flags.begin(), it->second.flags.end());
  return kept;
}

struct Options {
  std::string family = "phi";
  double a = 0.3;
  double a_prime = 0.3;
  double big_a = 0.9;
  double p = 0.1;
  double b = 0.22;
  int rounds = 1;
  std::string weak_policy = "pp";
  std::string accept = "psi";
  std::string grid;
  std::string preset;  // consumed by expand_presets, declared for --help
  std::string format = "csv";
  std::string run_format = "json";
  std::string out;
  double tol = 1e-9;
  std::string axis1;
  std::string axis2;
  std::string criterion = "chain";
  std::string p_range = "0:0.99";
  std::string suite = "all";
};

inline Family parse_family(const std::string& s) {
  if (s == "phi") return Family::Phi;
  if (s == "phi-asym") return Family::PhiAsym;
  if (s == "chi") return Family::Chi;
  throw UsageError("unknown family '" + s + "'");
}

inline WeakPolicy parse_policy(const std::string& s) {
  for (WeakPolicy w : {WeakPolicy::BothPlus, WeakPolicy::BothMinus, WeakPolicy::Mixed,
                       WeakPolicy::MixedReversed, WeakPolicy::None}) {
    if (s == to_string(w)) return w;
  }
  throw UsageError("unknown weak policy '" + s + "'");
}

inline std::vector<BellLabel> parse_accept(const std::string& s) {
  if (s == "psi") return {BellLabel::PsiPlus, BellLabel::PsiMinus};
  if (s == "phi") return {BellLabel::PhiPlus, BellLabel::PhiMinus};
  if (s == "all") return {kBellLabels.begin(), kBellLabels.end()};
  throw UsageError("unknown accept set '" + s + "'");
}

inline Parameter parse_parameter(const std::string& s) {
  if (s == "a") return Parameter::A_phi;
  if (s == "a-prime" || s == "a_prime") return Parameter::APrime;
  if (s == "A") return Parameter::A_chi;
  if (s == "p") return Parameter::P;
  if (s == "b") return Parameter::B;
  throw UsageError("unknown axis parameter '" + s + "' (expected a, a-prime, A, p or b)");
}

inline double parse_double(const std::string& s, const std::string& what) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw UsageError("bad number '" + s + "' in " + what);
  }
  return v;
}

inline int parse_count(const std::string& s, const std::string& what) {
  int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw UsageError("bad count '" + s + "' in " + what);
  }
  return v;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

/// "lo:hi"
inline std::pair<double, double> parse_range(const std::string& s, const std::string& what) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) throw UsageError(what + " must look like LO:HI, got '" + s + "'");
  return {parse_double(parts[0], what), parse_double(parts[1], what)};
}

/// "name:lo:hi"
inline Axis parse_axis(const std::string& s, int steps, const std::string& what) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) throw UsageError(what + " must look like NAME:LO:HI, got '" + s + "'");
  return Axis{parse_parameter(parts[0]), parse_double(parts[1], what),
              parse_double(parts[2], what), steps};
}

/// Worker count from SWAPURIFY_THREADS, else the hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("SWAPURIFY_THREADS"); env != nullptr && *env != '\0') {
    const int n = parse_count(env, "SWAPURIFY_THREADS");
    if (n < 1) throw UsageError("SWAPURIFY_THREADS must be a positive integer");
    return static_cast<unsigned>(n);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

inline ProtocolConfig make_config(const Options& o) {
  ProtocolConfig cfg;
  cfg.family = parse_family(o.family);
  cfg.a = o.a;
  cfg.a_prime = o.a_prime;
  cfg.big_a = o.big_a;
  cfg.p = o.p;
  cfg.b = o.b;
  cfg.rounds = o.rounds;
  cfg.weak_policy = parse_policy(o.weak_policy);
  cfg.accepted = parse_accept(o.accept);
  return cfg;
}

inline Numerics make_numerics(const Options& o) {
  if (!(o.tol >= 0.0)) throw UsageError("--tol must be non-negative");
  Numerics n;
  n.compare = o.tol;
  return n;
}

inline double json_number(double x) { return std::stod(format_number(x)); }

inline std::string table_json(const Table& t, nlohmann::ordered_json meta) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (double v : row) r.push_back(json_number(v));
    rows.push_back(std::move(r));
  }
  meta["columns"] = t.columns;
  meta["rows"] = std::move(rows);
  return meta.dump(1) + "\n";
}

inline std::string render_table(const Table& t, const std::string& format,
                                nlohmann::ordered_json meta) {
  if (format == "json") return table_json(t, std::move(meta));
  std::ostringstream os;
  write_csv(os, t);
  return os.str();
}

inline std::string cmd_scan(const Options& o) {
  const ProtocolConfig cfg = make_config(o);
  const Numerics numerics = make_numerics(o);
  int n1 = 200;
  int n2 = 200;
  if (!o.grid.empty()) {
    const auto parts = split(o.grid, 'x');
    if (parts.size() != 2) throw UsageError("--grid must look like NxM for scans");
    n1 = parse_count(parts[0], "--grid");
    n2 = parse_count(parts[1], "--grid");
  }
  const bool asym = cfg.family == Family::PhiAsym;
  const std::string weight = cfg.family == Family::Chi ? "A" : "a";
  const std::string d1 = asym ? "a:0:1" : "p:0:1";
  const std::string d2 = asym ? "a-prime:0:1" : weight + ":0:1";
  Grid2D grid{parse_axis(o.axis1.empty() ? d1 : o.axis1, n1, "--axis1"),
              parse_axis(o.axis2.empty() ? d2 : o.axis2, n2, "--axis2")};
  try {
    grid.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  cfg.validate();
  const RegionCriterion criterion =
      o.criterion == "final" ? RegionCriterion::FinalVsInitial : RegionCriterion::Chain;
  const RegionScan scan = enhancement_region(cfg, grid, criterion, worker_count(), numerics);
  nlohmann::ordered_json meta;
  meta["family"] = o.family;
  meta["rounds"] = o.rounds;
  meta["criterion"] = o.criterion;
  meta["axis1"] = std::string(to_string(grid.first.parameter));
  meta["axis2"] = std::string(to_string(grid.second.parameter));
  return render_table(region_table(scan), o.format, std::move(meta));
}

inline std::string cmd_curve(const Options& o) {
  ProtocolConfig cfg = make_config(o);
  const Numerics numerics = make_numerics(o);
  const int points = o.grid.empty() ? 200 : parse_count(o.grid, "--grid");
  const auto [lo, hi] = parse_range(o.p_range, "--p-range");
  std::vector<double> ps;
  try {
    ps = linspace(lo, hi, points);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  cfg.validate();
  const Table t = cfg.family == Family::Chi ? chi_curve(cfg, ps, numerics)
                                            : phi_curve(cfg, ps, numerics);
  nlohmann::ordered_json meta;
  meta["family"] = o.family;
  return render_table(t, o.format, std::move(meta));
}

inline nlohmann::ordered_json state_json(const DensityMatrix& rho) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const Complex& z : rho.matrix().entries()) {
    entries.push_back({json_number(z.real()), json_number(z.imag())});
  }
  return entries;
}

inline std::string cmd_run(const Options& o) {
  const ProtocolConfig cfg = make_config(o);
  const ProtocolRun run = run_protocol(cfg, make_numerics(o));
  if (o.run_format == "csv") {
    Table t{{"round", "concurrence", "swap_concurrence", "branch_probability", "weak_probability",
             "accepted_probability", "cumulative_probability", "expected_pairs"},
            {}};
    for (const auto& r : run.rounds) {
      t.add_row({static_cast<double>(r.round_index), r.concurrence, r.swap_concurrence,
                 r.branch_probability, r.weak_probability, r.accepted_probability,
                 r.cumulative_probability, r.expected_pairs});
    }
    std::ostringstream os;
    write_csv(os, t);
    return os.str();
  }
  nlohmann::ordered_json doc;
  doc["config"] = {{"family", o.family},       {"a", json_number(cfg.a)},
                   {"a_prime", json_number(cfg.a_prime)}, {"A", json_number(cfg.big_a)},
                   {"p", json_number(cfg.p)},   {"b", json_number(cfg.b)},
                   {"rounds", cfg.rounds},      {"weak_policy", o.weak_policy},
                   {"accept", o.accept}};
  doc["status"] = std::string(to_string(run.status));
  doc["diagnostic"] = run.diagnostic;
  doc["initial_concurrence"] = json_number(run.initial_concurrence);
  nlohmann::ordered_json rounds = nlohmann::ordered_json::array();
  for (const auto& r : run.rounds) {
    nlohmann::ordered_json j;
    j["round"] = r.round_index;
    j["branch"] = r.branch_label;
    j["concurrence"] = json_number(r.concurrence);
    j["swap_concurrence"] = json_number(r.swap_concurrence);
    j["branch_probability"] = json_number(r.branch_probability);
    j["weak_probability"] = json_number(r.weak_probability);
    j["accepted_probability"] = json_number(r.accepted_probability);
    j["cumulative_probability"] = json_number(r.cumulative_probability);
    j["log_cumulative_probability"] = json_number(r.log_cumulative_probability);
    j["expected_pairs"] = json_number(r.expected_pairs);
    j["state"] = state_json(r.state);
    rounds.push_back(std::move(j));
  }
  doc["rounds"] = std::move(rounds);
  return doc.dump(1) + "\n";
}

/// Runs the named suites; returns the report text and whether all passed.
inline std::pair<std::string, bool> cmd_verify(const Options& o) {
  if (!(o.tol > 0.0)) throw UsageError("--tol must be positive for verify");
  std::vector<VerifyReport> reports;
  const std::string& s = o.suite;
  const bool all = s == "all";
  if (all || s == "kraus") reports.push_back(verify_kraus());
  if (all || s == "closedforms") {
    reports.push_back(verify_closed_forms({}, o.tol));
    reports.push_back(verify_initial_concurrence({}, std::min(o.tol, 1e-10)));
    reports.push_back(verify_tradeoff({}, std::min(o.tol, 1e-12)));
  }
  if (all || s == "thresholds") reports.push_back(verify_thresholds());
  if (all || s == "asymptotic") reports.push_back(verify_asymptotic());

  std::ostringstream os;
  bool passed = true;
  for (const auto& r : reports) {
    passed = passed && r.passed;
    os << "suite " << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.checks
       << " checks, max deviation " << format_number(r.max_deviation) << ")\n";
    for (const auto& n : r.notes) os << "  note: " << n << '\n';
    for (const auto& f : r.failures) os << "  failure: " << f << '\n';
  }
  os << "overall: " << (passed ? "PASS" : "FAIL") << '\n';
  return {os.str(), passed};
}

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    out.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("failed writing '" + path + "'");
}

inline void add_model_options(CLI::App& sub, Options& o) {
  sub.add_option("--family", o.family, "State family")
      ->check(CLI::IsMember({"phi", "phi-asym", "chi"}));
  sub.add_option("--a", o.a, "phi weight on |01>");
  sub.add_option("--a-prime", o.a_prime, "phi-asym weight of the second pair");
  sub.add_option("--A", o.big_a, "chi weight on |00>");
  sub.add_option("--p", o.p, "Amplitude damping probability");
  sub.add_option("--b", o.b, "Weak measurement strength");
  sub.add_option("--rounds", o.rounds, "Protocol rounds");
  sub.add_option("--weak-policy", o.weak_policy, "Kept weak-measurement branches")
      ->check(CLI::IsMember({"pp", "mm", "mixed", "mixed-rev", "none"}));
  sub.add_option("--accept", o.accept, "Accepted Bell outcomes")
      ->check(CLI::IsMember({"psi", "phi", "all"}));
  sub.add_option("--tol", o.tol, "Comparison tolerance");
  sub.add_option("--out", o.out, "Output file (default stdout)");
}

inline void add_table_options(CLI::App& sub, Options& o) {
  sub.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub.add_option("--preset", o.preset, "Figure preset (expands to a fixed flag set)")
      ->check(CLI::IsMember({"fig1", "fig2", "fig3n2", "fig3n3", "fig4", "fig5a", "fig5b", "fig6"}));
}

inline int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  try {
    args = expand_presets(raw_args);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  Options o;
  CLI::App app{"Entanglement purification of amplitude-damped pairs by swapping", "swapurify"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  CLI::App* scan = app.add_subcommand("scan", "Enhancement region over a 2-D parameter grid");
  add_model_options(*scan, o);
  add_table_options(*scan, o);
  scan->add_option("--grid", o.grid, "Grid resolution NxM (default 200x200)");
  scan->add_option("--axis1", o.axis1, "First axis NAME:LO:HI");
  scan->add_option("--axis2", o.axis2, "Second axis NAME:LO:HI");
  scan->add_option("--criterion", o.criterion, "chain: every round improves; final: last vs first")
      ->check(CLI::IsMember({"chain", "final"}));

  CLI::App* curve = app.add_subcommand("curve", "Concurrence versus damping probability");
  add_model_options(*curve, o);
  add_table_options(*curve, o);
  curve->add_option("--grid", o.grid, "Number of p samples (default 200)");
  curve->add_option("--p-range", o.p_range, "Sampled p interval LO:HI");

  CLI::App* verify = app.add_subcommand("verify", "Run the self-verification suites");
  verify->add_option("suite", o.suite, "all, kraus, closedforms, thresholds or asymptotic")
      ->check(CLI::IsMember({"all", "kraus", "closedforms", "thresholds", "asymptotic"}));
  verify->add_option("--tol", o.tol, "Closed-form agreement tolerance");
  verify->add_option("--out", o.out, "Report file (default stdout)");

  CLI::App* run = app.add_subcommand("run", "Run one protocol instance and print every round");
  add_model_options(*run, o);
  run->add_option("--format", o.run_format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  std::vector<const char*> argv{"swapurify"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (scan->parsed()) {
      emit(cmd_scan(o), o.out, out);
    } else if (curve->parsed()) {
      emit(cmd_curve(o), o.out, out);
    } else if (run->parsed()) {
      emit(cmd_run(o), o.out, out);
    } else if (verify->parsed()) {
      const auto [text, passed] = cmd_verify(o);
      emit(text, o.out, out);
      if (!passed) {
        err << "verification failed\n";
        return kVerifyFailed;
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const NumericsError& e) {
    err << "numerical certification failed: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace swapurify::cli

#endif  // SWAPURIFY_TOOLS_CLI_HPP
