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

// Acceptance checks. Prints one PASS/FAIL line per criterion; run a single
// criterion with --only N.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli.hpp"
#include "swapurify/swapurify.hpp"

using namespace swapurify;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // 0 means no limit
  std::function<Outcome()> run;
};

std::string fmt(double x) { return format_number(x); }

Outcome from_report(const VerifyReport& r) {
  Outcome o{r.passed, std::to_string(r.checks) + " checks, max deviation " + fmt(r.max_deviation)};
  for (const auto& n : r.notes) o.detail += "; " + n;
  for (const auto& f : r.failures) o.detail += "; " + f;
  return o;
}

ProtocolConfig phi_config(double a, double p) {
  ProtocolConfig c;
  c.family = Family::Phi;
  c.a = a;
  c.p = p;
  return c;
}

Outcome c01_kraus() { return from_report(verify_kraus()); }

Outcome c02_closed_forms() { return from_report(verify_closed_forms()); }

Outcome c03_initial_concurrence() { return from_report(verify_initial_concurrence()); }

Outcome c04_small_a_always_enhanced() {
  Numerics numerics;
  numerics.compare = 1e-9;
  int points = 0;
  double worst = 1.0;
  std::string misses;
  for (int i = 0; i < 40; ++i) {
    const double a = 0.005 + 0.195 * (i + 1) / 40.0;
    for (int j = 0; j < 99; ++j) {
      const double p = 0.005 + 0.99 * (j + 1) / 100.0;
      const ProtocolRun run = run_protocol(phi_config(a, p), numerics);
      ++points;
      if (run.ok()) worst = std::min(worst, run.final_concurrence() - run.initial_concurrence);
      if (!is_enhanced(run, RegionCriterion::Chain, numerics) && misses.size() < 400) {
        misses += " (a=" + fmt(a) + ", p=" + fmt(p) + ")";
      }
    }
  }
  Outcome o{misses.empty(), std::to_string(points) + " points, smallest gain " + fmt(worst)};
  if (!misses.empty()) o.detail += "; not enhanced at" + misses;
  return o;
}

Outcome c05_thresholds() { return from_report(verify_thresholds()); }

Outcome c06_tradeoff() { return from_report(verify_tradeoff()); }

Outcome c07_fig4_ordering() {
  Outcome o;
  Numerics numerics;
  std::vector<std::string> chain_breaks;
  int later_round_breaks = 0;
  for (int k = 0; k < 50; ++k) {
    const double p = 0.01 + 0.49 * (k + 1) / 51.0;
    ProtocolConfig cfg = phi_config(0.3, p);
    cfg.b = 0.22;
    cfg.rounds = 3;
    const ProtocolRun run = run_protocol(cfg, numerics);
    if (!run.ok()) {
      o.pass = false;
      chain_breaks.push_back("p=" + fmt(p) + " aborted");
      continue;
    }
    const double c0 = run.initial_concurrence;
    const double c1 = run.rounds[0].concurrence;
    const double c2 = run.rounds[1].concurrence;
    const double c3 = run.rounds[2].concurrence;
    if (!(c1 < c2 && c2 < c3)) ++later_round_breaks;
    if (!(c0 < c1 && c1 < c2 && c2 < c3)) {
      o.pass = false;
      chain_breaks.push_back("p=" + fmt(p) + ": C(rho_AB)=" + fmt(c0) + " C1=" + fmt(c1));
    }
  }

  const ProtocolRun point = [] {
    ProtocolConfig cfg = phi_config(0.3, 0.1);
    cfg.b = 0.22;
    cfg.rounds = 2;
    return run_protocol(cfg);
  }();
  const double d0 = std::abs(point.initial_concurrence - 0.824863);
  const double d1 = std::abs(point.rounds[0].concurrence - 0.863013);
  // The quoted 0.917824 is not what its own reduction 0.4914/0.5354 gives.
  const double d2 = std::abs(point.rounds[1].concurrence - 0.4914 / 0.5354);
  const bool point_ok = d0 <= 1e-6 && d1 <= 1e-6 && d2 <= 1e-6;
  o.pass = o.pass && point_ok;

  o.detail = "point check " + std::string(point_ok ? "ok" : "FAILED") + " (deviations " + fmt(d0) +
             ", " + fmt(d1) + ", " + fmt(d2) + "); C1<C2<C3 broken at " +
             std::to_string(later_round_breaks) + "/50 p values; full chain broken at " +
             std::to_string(chain_breaks.size()) + "/50 p values";
  if (!chain_breaks.empty()) {
    o.detail += " (C(rho_AB) < C1 needs p < 0.2126 at a=0.3):";
    for (const auto& s : chain_breaks) o.detail += " [" + s + "]";
  }
  return o;
}

Outcome c08_negative_results() {
  Numerics numerics;
  numerics.compare = 1e-9;
  int checked = 0;
  std::string counterexamples;
  double worst_phi = -1.0;
  double worst_noflip = -1.0;
  auto note = [&counterexamples](const std::string& s) {
    if (counterexamples.size() < 600) counterexamples += " [" + s + "]";
  };
  for (double x : sixteenths()) {
    for (double p : sixteenths()) {
      for (Family family : {Family::Phi, Family::Chi}) {
        for (BellLabel label : {BellLabel::PhiPlus, BellLabel::PhiMinus}) {
          ProtocolConfig cfg = phi_config(x, p);
          cfg.family = family;
          cfg.big_a = x;
          cfg.weak_policy = WeakPolicy::None;
          cfg.accepted = {label};
          const ProtocolRun run = run_protocol(cfg, numerics);
          ++checked;
          if (!run.ok()) continue;
          worst_phi = std::max(worst_phi, run.final_concurrence() - run.initial_concurrence);
          if (is_enhanced(run, RegionCriterion::FinalVsInitial, numerics)) {
            note(std::string(to_string(family)) + " " + std::string(to_string(label)) + " x=" +
                 fmt(x) + " p=" + fmt(p));
          }
        }
      }
      for (BellLabel label : {BellLabel::PsiPlus, BellLabel::PsiMinus}) {
        ProtocolConfig cfg = phi_config(x, p);
        cfg.flip_second_pair = false;
        cfg.accepted = {label};
        const ProtocolRun run = run_protocol(cfg, numerics);
        ++checked;
        if (!run.ok()) {
          note("no-flip run aborted a=" + fmt(x) + " p=" + fmt(p));
          continue;
        }
        const double gain = run.final_concurrence() - run.initial_concurrence;
        worst_noflip = std::max(worst_noflip, gain);
        if (!(gain < -numerics.compare)) note("no-flip a=" + fmt(x) + " p=" + fmt(p));
      }
    }
  }
  Outcome o{counterexamples.empty(),
            std::to_string(checked) + " runs; largest gain on Phi branches " + fmt(worst_phi) +
                ", without flipping " + fmt(worst_noflip)};
  if (!counterexamples.empty()) o.detail += "; counterexamples:" + counterexamples;
  return o;
}

Outcome c09_fig6_dominance() {
  Numerics numerics;
  double worst = 1.0;
  std::string misses;
  for (int k = 0; k < 60; ++k) {
    const double p = 0.01 + 0.59 * (k + 1) / 61.0;
    ProtocolConfig cfg;
    cfg.family = Family::Chi;
    cfg.big_a = 0.9;
    cfg.p = p;
    cfg.b = 0.25;
    cfg.weak_policy = WeakPolicy::BothPlus;
    const ProtocolRun run = run_protocol(cfg, numerics);
    if (!run.ok()) {
      misses += " p=" + fmt(p) + " aborted";
      continue;
    }
    const double margin = run.final_concurrence() - run.initial_concurrence;
    worst = std::min(worst, margin);
    if (!strictly_greater(run.final_concurrence(), run.initial_concurrence, numerics)) {
      misses += " p=" + fmt(p);
    }
  }
  Outcome o{misses.empty(), "60 samples, smallest C(chi'_AC) - C(chi_AB) = " + fmt(worst)};
  if (!misses.empty()) o.detail += "; violated at" + misses;
  return o;
}

Outcome c10_asymptotic() {
  const VerifyReport r = verify_asymptotic();
  Outcome o = from_report(r);
  int worst = 0;
  for (const auto& t : asymptotic_traces(20260101, 25, 0.22, 40, 0.999)) {
    worst = std::max(worst, t.rounds_needed);
  }
  o.detail += "; max rounds " + std::to_string(worst);
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Outcome c11_determinism() {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("swapurify_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  Outcome o;
  std::size_t bytes = 0;
  for (const auto& [name, preset] : cli::presets()) {
    std::string files[2];
    for (int trial = 0; trial < 2; ++trial) {
      // Different worker counts on the two runs.
      ::setenv("SWAPURIFY_THREADS", trial == 0 ? "1" : "3", 1);
      const auto path = dir / (name + "_" + std::to_string(trial) + ".csv");
      std::ostringstream out;
      std::ostringstream err;
      const int code = cli::run_cli({preset.subcommand, "--preset", name, "--out", path.string()},
                                    out, err);
      if (code != 0) {
        o.pass = false;
        o.detail += " " + name + " exited " + std::to_string(code) + ": " + err.str();
      }
      files[trial] = slurp(path);
    }
    if (files[0] != files[1] || files[0].empty()) {
      o.pass = false;
      o.detail += " " + name + " differs;";
    }
    bytes += files[0].size();
  }
  ::unsetenv("SWAPURIFY_THREADS");
  std::filesystem::remove_all(dir);
  o.detail = std::to_string(cli::presets().size()) + " presets, " + std::to_string(bytes) +
             " bytes each run" + o.detail;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  int only = 0;
  app.add_option("--only", only, "Run a single criterion (1-11)")->check(CLI::Range(1, 11));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "Kraus completeness and trace preservation", 1.0, c01_kraus},
      {2, "closed forms match the simulator", 30.0, c02_closed_forms},
      {3, "C(rho_AB) = C(rho_BC) = 2(1-p)sqrt(a(1-a))", 0.0, c03_initial_concurrence},
      {4, "a <= 0.2 is always enhanced", 0.0, c04_small_a_always_enhanced},
      {5, "weak-measurement sign thresholds", 0.0, c05_thresholds},
      {6, "trade-off identity C2 p2 = b(1-b)(1-p)^4 a^2 (1-a)^2", 0.0, c06_tradeoff},
      {7, "concurrence ordering at a=0.3, b=0.22", 0.0, c07_fig4_ordering},
      {8, "Phi-branch and no-flip negative results", 0.0, c08_negative_results},
      {9, "chi weak step dominates the initial pair", 0.0, c09_fig6_dominance},
      {10, "asymptotic purification within 40 rounds", 10.0, c10_asymptotic},
      {11, "preset output is byte-identical across runs", 0.0, c11_determinism},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit_s > 0.0 && secs > c.time_limit_s) {
      o.pass = false;
      o.detail += "; runtime " + fmt(secs) + " s exceeds " + fmt(c.time_limit_s) + " s";
    }
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << c.title
              << " [" << time.str() << " s] " << o.detail << '\n';
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
