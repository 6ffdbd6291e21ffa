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

#ifndef SWAPURIFY_PROTOCOL_HPP
#define SWAPURIFY_PROTOCOL_HPP

/// \file
/// Entanglement purification by swapping amplitude-damped pairs.
///
/// Round 1: Alice-Bob and Bob-Charlie each share a damped pair; the register
/// is (A, B, B', C) and Bob Bell-measures (B, B'). Round k >= 2 (phi family):
/// two copies of the previous Alice-Charlie state are weakly measured (copy 1
/// on its Alice qubit, copy 2 on its Charlie qubit) and swapped again with the
/// register (A, C1, A2, C). For the chi family the weak measurement is applied
/// to both qubits of the swapped state in the same round.
///
/// The protocol follows one tracked Bell outcome per round: the first accepted
/// label in the order Psi+, Psi-, Phi+, Phi-. Other accepted outcomes enter
/// only `accepted_probability` and the resource estimate.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "swapurify/channels.hpp"
#include "swapurify/entanglement.hpp"
#include "swapurify/measure.hpp"
#include "swapurify/qmat.hpp"
#include "swapurify/states.hpp"

namespace swapurify {

enum class Family { Phi, PhiAsym, Chi };

/// Weak-measurement signs: first entry for copy 1 (or qubit A), second for
/// copy 2 (or qubit C).
enum class WeakPolicy { BothPlus, BothMinus, Mixed, MixedReversed, None };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::Phi: return "phi";
    case Family::PhiAsym: return "phi-asym";
    case Family::Chi: return "chi";
  }
  return "?";
}

inline std::string_view to_string(WeakPolicy w) {
  switch (w) {
    case WeakPolicy::BothPlus: return "pp";
    case WeakPolicy::BothMinus: return "mm";
    case WeakPolicy::Mixed: return "mixed";
    case WeakPolicy::MixedReversed: return "mixed-rev";
    case WeakPolicy::None: return "none";
  }
  return "?";
}

inline std::optional<std::pair<WeakSign, WeakSign>> weak_signs(WeakPolicy w) {
  switch (w) {
    case WeakPolicy::BothPlus: return std::pair{WeakSign::Plus, WeakSign::Plus};
    case WeakPolicy::BothMinus: return std::pair{WeakSign::Minus, WeakSign::Minus};
    case WeakPolicy::Mixed: return std::pair{WeakSign::Plus, WeakSign::Minus};
    case WeakPolicy::MixedReversed: return std::pair{WeakSign::Minus, WeakSign::Plus};
    case WeakPolicy::None: return std::nullopt;
  }
  return std::nullopt;
}

struct ProtocolConfig {
  Family family = Family::Phi;
  /// phi weight on |01> of the first pair.
  double a = 0.3;
  /// phi-asym: weight of the flipped second pair.
  double a_prime = 0.3;
  /// chi weight on |00>.
  double big_a = 0.9;
  /// Damping probability of every local channel.
  double p = 0.1;
  /// Weak measurement strength.
  double b = 0.22;
  int rounds = 1;
  WeakPolicy weak_policy = WeakPolicy::BothPlus;
  std::vector<BellLabel> accepted = {BellLabel::PsiPlus, BellLabel::PsiMinus};
  /// Optional per-qubit damping for (A, B, B', C); overrides p when set.
  std::optional<std::array<double, 4>> damping_per_qubit;
  /// phi families: prepare the Bob-Charlie pair in the flipped form. Turning
  /// this off sends two identically oriented pairs into the swap.
  bool flip_second_pair = true;

  void validate() const {
    auto unit = [](double x, const char* name) {
      if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " +
                                    std::to_string(x));
      }
    };
    unit(a, "a");
    unit(a_prime, "a_prime");
    unit(big_a, "A");
    unit(p, "p");
    if (damping_per_qubit) {
      for (double d : *damping_per_qubit) unit(d, "per-qubit damping");
    }
    if (rounds < 1) throw std::invalid_argument("rounds must be at least 1");
    if (accepted.empty()) throw std::invalid_argument("accepted Bell outcome set is empty");
    const bool uses_weak =
        weak_policy != WeakPolicy::None && (family == Family::Chi || rounds >= 2);
    if (uses_weak && !(b > 0.0 && b < 1.0)) {
      throw std::invalid_argument("weak measurement strength b must lie in (0, 1), got " +
                                  std::to_string(b));
    }
  }
};

/// One protocol round along the tracked branch.
struct RoundResult {
  int round_index = 0;
  std::string branch_label;
  /// Alice-Charlie state at the end of the round.
  DensityMatrix state;
  double concurrence = 0.0;
  /// Concurrence right after the Bell measurement (differs from
  /// `concurrence` only for the chi family with a weak step).
  double swap_concurrence = 0.0;
  /// Probability of this round's tracked branches given its inputs:
  /// weak branches of both copies times the Bell outcome.
  double branch_probability = 0.0;
  /// Weak-measurement part of branch_probability (1 when none).
  double weak_probability = 1.0;
  /// As branch_probability but summed over all accepted Bell outcomes.
  double accepted_probability = 0.0;
  /// Joint probability of the whole tracked history, counting every copy.
  double cumulative_probability = 0.0;
  double log_cumulative_probability = 0.0;
  /// Expected number of initial noisy pairs consumed per accepted output.
  double expected_pairs = 0.0;
};

enum class RunStatus { Ok, NoEntanglement, ZeroProbabilityBranch };

inline std::string_view to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Ok: return "ok";
    case RunStatus::NoEntanglement: return "no-entanglement";
    case RunStatus::ZeroProbabilityBranch: return "zero-probability-branch";
  }
  return "?";
}

/// A local operation the protocol performed, for auditing.
struct OperationRecord {
  int round_index = 0;
  std::string kind;  // "channel", "weak", "bell"
  std::vector<int> qubits;
  std::vector<std::string> owners;  // owner node of each qubit
};

struct ProtocolRun {
  RunStatus status = RunStatus::Ok;
  std::string diagnostic;
  double initial_concurrence = 0.0;
  std::vector<RoundResult> rounds;
  std::vector<OperationRecord> operations;

  bool ok() const { return status == RunStatus::Ok; }
  double final_concurrence() const {
    return rounds.empty() ? initial_concurrence : rounds.back().concurrence;
  }
};

/// (rho_AB, rho_BC) after local damping of the freshly prepared pairs.
inline std::pair<DensityMatrix, DensityMatrix> prepare_noisy_pairs(const ProtocolConfig& cfg,
                                                                   const Numerics& numerics = {}) {
  cfg.validate();
  PureState first = phi_pair(cfg.a);
  const double second_weight = cfg.family == Family::PhiAsym ? cfg.a_prime : cfg.a;
  PureState second =
      cfg.flip_second_pair ? phi_pair_flipped(second_weight) : phi_pair(second_weight);
  switch (cfg.family) {
    case Family::Phi:
    case Family::PhiAsym: break;
    case Family::Chi:
      first = chi_pair(cfg.big_a);
      second = chi_pair(cfg.big_a);
      break;
  }
  const std::array<double, 4> d =
      cfg.damping_per_qubit.value_or(std::array<double, 4>{cfg.p, cfg.p, cfg.p, cfg.p});
  return {apply_local_pair(amplitude_damping(d[0]), amplitude_damping(d[1]), to_density(first),
                           numerics),
          apply_local_pair(amplitude_damping(d[2]), amplitude_damping(d[3]), to_density(second),
                           numerics)};
}

namespace detail {

inline std::vector<BellLabel> tracking_order(const std::vector<BellLabel>& accepted) {
  std::vector<BellLabel> out;
  for (BellLabel l : {BellLabel::PsiPlus, BellLabel::PsiMinus, BellLabel::PhiPlus,
                      BellLabel::PhiMinus}) {
    if (std::find(accepted.begin(), accepted.end(), l) != accepted.end()) out.push_back(l);
  }
  return out;
}

inline std::size_t bell_index(BellLabel l) {
  return static_cast<std::size_t>(
      std::find(kBellLabels.begin(), kBellLabels.end(), l) - kBellLabels.begin());
}

}  // namespace detail

/// Bob's Bell measurement on (B, B') of rho_AB (x) rho_BC. Returns one result
/// per accepted outcome with nonzero probability, Psi+ first.
inline std::vector<RoundResult> swap_round(const std::pair<DensityMatrix, DensityMatrix>& pairs,
                                           const std::vector<BellLabel>& accepted,
                                           const Numerics& numerics = {}) {
  if (pairs.first.n_qubits() != 2 || pairs.second.n_qubits() != 2) {
    throw std::invalid_argument("swap_round needs two 2-qubit states");
  }
  const auto outcomes = bell_measure(kron(pairs.first, pairs.second), {1, 2}, numerics);
  double accepted_total = 0.0;
  for (BellLabel l : accepted) accepted_total += outcomes[detail::bell_index(l)].probability;

  std::vector<RoundResult> out;
  for (BellLabel l : detail::tracking_order(accepted)) {
    const auto& o = outcomes[detail::bell_index(l)];
    if (!o.valid()) continue;
    const double c = concurrence(*o.post_state, numerics).value;
    out.push_back(RoundResult{.round_index = 1,
                              .branch_label = o.label,
                              .state = *o.post_state,
                              .concurrence = c,
                              .swap_concurrence = c,
                              .branch_probability = o.probability,
                              .weak_probability = 1.0,
                              .accepted_probability = accepted_total,
                              .cumulative_probability = o.probability,
                              .log_cumulative_probability = std::log(o.probability),
                              .expected_pairs = 2.0 / accepted_total});
  }
  return out;
}

/// Sequential weak measurements keeping the listed branches. The combined
/// outcome carries the product of the conditional probabilities.
inline MeasurementOutcome weak_preprocess(const DensityMatrix& state,
                                          const std::vector<std::pair<int, WeakSign>>& steps,
                                          double b, const Numerics& numerics = {}) {
  const WeakMeasurement m(b);
  MeasurementOutcome out{.label = "", .probability = 1.0, .post_state = state};
  for (const auto& [target, sign] : steps) {
    const MeasurementOutcome next = weak_branch(*out.post_state, target, m, sign, numerics);
    out.label += next.label;
    out.probability *= next.probability;
    if (!next.valid()) {
      out.probability = 0.0;
      out.post_state.reset();
      return out;
    }
    out.post_state = next.post_state;
  }
  return out;
}

namespace detail {

struct BellStep {
  double tracked_probability = 0.0;
  double accepted_probability = 0.0;
  std::string label;
  std::optional<DensityMatrix> state;
};

inline BellStep swap_tracked(const DensityMatrix& left, const DensityMatrix& right,
                             const std::vector<BellLabel>& accepted, const Numerics& numerics) {
  const auto outcomes = bell_measure(kron(left, right), {1, 2}, numerics);
  BellStep step;
  for (BellLabel l : accepted) step.accepted_probability += outcomes[bell_index(l)].probability;
  const auto& tracked = outcomes[bell_index(tracking_order(accepted).front())];
  step.tracked_probability = tracked.probability;
  step.label = tracked.label;
  step.state = tracked.post_state;
  return step;
}

inline void record(std::vector<OperationRecord>& ops, int round, std::string kind,
                   std::vector<int> qubits, const std::array<const char*, 4>& owners) {
  OperationRecord r{.round_index = round, .kind = std::move(kind), .qubits = std::move(qubits),
                    .owners = {}};
  for (int q : r.qubits) r.owners.emplace_back(owners[static_cast<std::size_t>(q)]);
  ops.push_back(std::move(r));
}

inline constexpr std::array<const char*, 4> kRegisterOwners = {"Alice", "Bob", "Bob", "Charlie"};
inline constexpr std::array<const char*, 4> kPairOwners = {"Alice", "Charlie", "", ""};

}  // namespace detail

/// Runs the configured number of rounds along the tracked branch.
inline ProtocolRun run_protocol(const ProtocolConfig& cfg, const Numerics& numerics = {}) {
  cfg.validate();
  ProtocolRun run;
  const auto pairs = prepare_noisy_pairs(cfg, numerics);
  for (int q = 0; q < 4; ++q) {
    detail::record(run.operations, 0, "channel", {q}, detail::kRegisterOwners);
  }
  run.initial_concurrence = concurrence(pairs.first, numerics).value;
  const double second_concurrence = concurrence(pairs.second, numerics).value;
  if (run.initial_concurrence <= numerics.atol || second_concurrence <= numerics.atol) {
    run.status = RunStatus::NoEntanglement;
    run.diagnostic = "an input pair is separable; no entanglement to purify";
    return run;
  }

  const auto signs = weak_signs(cfg.weak_policy);
  auto abort_zero = [&run](int round, std::string_view what) {
    run.status = RunStatus::ZeroProbabilityBranch;
    run.diagnostic = "round " + std::to_string(round) + ": " + std::string(what) +
                     " has zero probability";
  };

  std::optional<DensityMatrix> current;
  double cumulative = 1.0;
  double log_cumulative = 0.0;
  double expected_pairs = 1.0;
  for (int k = 1; k <= cfg.rounds; ++k) {
    DensityMatrix left = pairs.first;
    DensityMatrix right = pairs.second;
    double weak_prob = 1.0;
    double copy_cost = 2.0;  // inputs consumed per swap attempt, in initial pairs
    std::string prefix;

    if (k >= 2) {
      left = *current;
      right = *current;
      copy_cost = 2.0 * expected_pairs;
      if (cfg.family != Family::Chi && signs) {
        const auto first = weak_preprocess(*current, {{0, signs->first}}, cfg.b, numerics);
        const auto second = weak_preprocess(*current, {{1, signs->second}}, cfg.b, numerics);
        detail::record(run.operations, k, "weak", {0}, detail::kPairOwners);
        detail::record(run.operations, k, "weak", {1}, detail::kPairOwners);
        if (!first.valid() || !second.valid()) {
          abort_zero(k, "weak measurement branch");
          return run;
        }
        left = *first.post_state;
        right = *second.post_state;
        weak_prob = first.probability * second.probability;
        copy_cost = expected_pairs * (1.0 / first.probability + 1.0 / second.probability);
        prefix = first.label + "/" + second.label + " ";
      }
    }

    const auto step = detail::swap_tracked(left, right, cfg.accepted, numerics);
    detail::record(run.operations, k, "bell", {1, 2}, detail::kRegisterOwners);
    if (!step.state) {
      abort_zero(k, "Bell outcome " + step.label);
      return run;
    }
    DensityMatrix state = *step.state;
    const double swap_c = concurrence(state, numerics).value;
    double post_prob = 1.0;
    std::string suffix;
    if (cfg.family == Family::Chi && signs) {
      const auto filtered =
          weak_preprocess(state, {{0, signs->first}, {1, signs->second}}, cfg.b, numerics);
      detail::record(run.operations, k, "weak", {0}, detail::kPairOwners);
      detail::record(run.operations, k, "weak", {1}, detail::kPairOwners);
      if (!filtered.valid()) {
        abort_zero(k, "weak measurement branch");
        return run;
      }
      state = *filtered.post_state;
      post_prob = filtered.probability;
      weak_prob = filtered.probability;
      suffix = " " + filtered.label;
    }

    const double branch = step.tracked_probability * weak_prob;
    const double accepted = step.accepted_probability * weak_prob;
    if (k == 1) {
      cumulative = branch;
      log_cumulative = std::log(branch);
    } else {
      cumulative = cumulative * cumulative * branch;
      log_cumulative = 2.0 * log_cumulative + std::log(branch);
    }
    expected_pairs = copy_cost / (step.accepted_probability * post_prob);

    const double c = concurrence(state, numerics).value;
    run.rounds.push_back(RoundResult{.round_index = k,
                                     .branch_label = prefix + step.label + suffix,
                                     .state = state,
                                     .concurrence = c,
                                     .swap_concurrence = swap_c,
                                     .branch_probability = branch,
                                     .weak_probability = weak_prob,
                                     .accepted_probability = accepted,
                                     .cumulative_probability = cumulative,
                                     .log_cumulative_probability = log_cumulative,
                                     .expected_pairs = expected_pairs});
    current = state;
  }
  return run;
}

/// Which concurrence comparison defines "enhanced".
enum class RegionCriterion {
  /// Every round improves on the previous one: C(n) > ... > C(1) > C(rho_AB).
  Chain,
  /// Only the final state is compared with the initial pair.
  FinalVsInitial,
};

/// x > y with the comparison tolerance.
inline bool strictly_greater(double x, double y, const Numerics& numerics) {
  return x > y + numerics.compare;
}

inline bool is_enhanced(const ProtocolRun& run, RegionCriterion criterion,
                        const Numerics& numerics = {}) {
  if (!run.ok() || run.rounds.empty()) return false;
  if (criterion == RegionCriterion::FinalVsInitial) {
    return strictly_greater(run.final_concurrence(), run.initial_concurrence, numerics);
  }
  double prev = run.initial_concurrence;
  for (const auto& r : run.rounds) {
    if (!strictly_greater(r.concurrence, prev, numerics)) return false;
    prev = r.concurrence;
  }
  return true;
}

enum class Parameter { A_phi, APrime, A_chi, P, B };

inline std::string_view to_string(Parameter p) {
  switch (p) {
    case Parameter::A_phi: return "a";
    case Parameter::APrime: return "a_prime";
    case Parameter::A_chi: return "A";
    case Parameter::P: return "p";
    case Parameter::B: return "b";
  }
  return "?";
}

inline void set_parameter(ProtocolConfig& cfg, Parameter which, double value) {
  switch (which) {
    case Parameter::A_phi: cfg.a = value; break;
    case Parameter::APrime: cfg.a_prime = value; break;
    case Parameter::A_chi: cfg.big_a = value; break;
    case Parameter::P: cfg.p = value; break;
    case Parameter::B: cfg.b = value; break;
  }
}

struct Axis {
  Parameter parameter = Parameter::P;
  double lo = 0.0;
  double hi = 1.0;
  int steps = 200;

  double value(int i) const {
    if (i == steps - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
};

struct Grid2D {
  Axis first;
  Axis second;

  void validate() const {
    for (const Axis* ax : {&first, &second}) {
      if (ax->steps < 2) throw std::invalid_argument("grid needs at least 2 steps per axis");
      if (!(ax->lo < ax->hi)) throw std::invalid_argument("grid axis needs lo < hi");
    }
    if (first.parameter == second.parameter) {
      throw std::invalid_argument("grid axes must name distinct parameters");
    }
  }
};

struct RegionPoint {
  double x = 0.0;
  double y = 0.0;
  double c_initial = 0.0;
  double c_final = 0.0;
  bool enhanced = false;
  /// Cumulative probability of the tracked branch (0 if the run aborted).
  double probability = 0.0;
  RunStatus status = RunStatus::Ok;
};

struct RegionScan {
  Grid2D grid;
  /// Row-major in the first axis: index = i * second.steps + j.
  std::vector<RegionPoint> points;

  const RegionPoint& at(int i, int j) const {
    return points[static_cast<std::size_t>(i) * static_cast<std::size_t>(grid.second.steps) +
                  static_cast<std::size_t>(j)];
  }
  std::vector<bool> mask() const {
    std::vector<bool> m;
    m.reserve(points.size());
    for (const auto& pt : points) m.push_back(pt.enhanced);
    return m;
  }
  std::size_t enhanced_count() const {
    return static_cast<std::size_t>(
        std::count_if(points.begin(), points.end(), [](const auto& pt) { return pt.enhanced; }));
  }
};

inline RegionPoint evaluate_point(const ProtocolConfig& cfg, RegionCriterion criterion,
                                  const Numerics& numerics = {}) {
  RegionPoint pt;
  const ProtocolRun run = run_protocol(cfg, numerics);
  pt.status = run.status;
  pt.c_initial = run.initial_concurrence;
  pt.c_final = run.ok() ? run.final_concurrence() : 0.0;
  pt.enhanced = is_enhanced(run, criterion, numerics);
  pt.probability = run.ok() ? run.rounds.back().cumulative_probability : 0.0;
  return pt;
}

/// Evaluates the protocol over a 2-D grid. Rows of the first axis are spread
/// over `threads` workers; results land at their grid index, so the output
/// does not depend on the worker count.
inline RegionScan enhancement_region(const ProtocolConfig& base, const Grid2D& grid,
                                     RegionCriterion criterion, unsigned threads = 1,
                                     const Numerics& numerics = {}) {
  grid.validate();
  RegionScan scan{grid, {}};
  const int n1 = grid.first.steps;
  const int n2 = grid.second.steps;
  scan.points.resize(static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2));

  auto work = [&](unsigned worker, unsigned stride) {
    for (int i = static_cast<int>(worker); i < n1; i += static_cast<int>(stride)) {
      for (int j = 0; j < n2; ++j) {
        ProtocolConfig cfg = base;
        const double x = grid.first.value(i);
        const double y = grid.second.value(j);
        set_parameter(cfg, grid.first.parameter, x);
        set_parameter(cfg, grid.second.parameter, y);
        RegionPoint pt = evaluate_point(cfg, criterion, numerics);
        pt.x = x;
        pt.y = y;
        scan.points[static_cast<std::size_t>(i) * static_cast<std::size_t>(n2) +
                    static_cast<std::size_t>(j)] = pt;
      }
    }
  };

  threads = std::clamp(threads, 1U, static_cast<unsigned>(n1));
  if (threads == 1) {
    work(0, 1);
    return scan;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  for (auto& th : pool) th.join();
  return scan;
}

struct ThresholdOutcome {
  WeakPolicy policy;
  double concurrence_round2 = 0.0;
  bool enhanced = false;
};

struct ThresholdReport {
  double concurrence_initial = 0.0;
  double concurrence_round1 = 0.0;
  /// pp, mm, mixed (M+ on copy 1), mixed-rev (M- on copy 1).
  std::array<ThresholdOutcome, 4> outcomes{};
};

/// Second-round concurrence versus first-round for every sign combination of
/// the two weak measurements (phi family, Psi branch).
inline ThresholdReport threshold_checks(double a, double p, double b,
                                        const Numerics& numerics = {}) {
  ThresholdReport report;
  const std::array<WeakPolicy, 4> policies = {WeakPolicy::BothPlus, WeakPolicy::BothMinus,
                                              WeakPolicy::Mixed, WeakPolicy::MixedReversed};
  for (std::size_t i = 0; i < policies.size(); ++i) {
    ProtocolConfig cfg;
    cfg.family = Family::Phi;
    cfg.a = a;
    cfg.p = p;
    cfg.b = b;
    cfg.rounds = 2;
    cfg.weak_policy = policies[i];
    const ProtocolRun run = run_protocol(cfg, numerics);
    if (!run.ok()) throw std::invalid_argument("threshold check: " + run.diagnostic);
    report.concurrence_initial = run.initial_concurrence;
    report.concurrence_round1 = run.rounds[0].concurrence;
    report.outcomes[i] = {policies[i], run.rounds[1].concurrence,
                          strictly_greater(run.rounds[1].concurrence, run.rounds[0].concurrence,
                                           numerics)};
  }
  return report;
}

enum class Subspace { None, Span000110, Span011011 };

inline std::string_view to_string(Subspace s) {
  switch (s) {
    case Subspace::None: return "none";
    case Subspace::Span000110: return "{|00>,|01>,|10>}";
    case Subspace::Span011011: return "{|01>,|10>,|11>}";
  }
  return "?";
}

struct PurifiabilityCheck {
  bool holds = false;
  Complex lhs;  // rho_22 * rho_33
  Complex rhs;  // rho_23 * rho_32
  Subspace subspace = Subspace::None;
};

/// Condition rho_22 rho_33 = rho_23 rho_32 on states supported in
/// span{|00>,|01>,|10>} or span{|01>,|10>,|11>}. Indices are 1-based over the
/// computational basis |00>,|01>,|10>,|11>, so rho_22 = <01|rho|01>,
/// rho_33 = <10|rho|10> and rho_23 = <01|rho|10>.
inline PurifiabilityCheck purifiability_condition(const DensityMatrix& rho,
                                                  const Numerics& numerics = {}) {
  if (rho.n_qubits() != 2) throw std::invalid_argument("purifiability check needs 2 qubits");
  PurifiabilityCheck out;
  out.lhs = rho(1, 1) * rho(2, 2);
  out.rhs = rho(1, 2) * rho(2, 1);
  // For a PSD matrix a vanishing diagonal entry forces its row and column to vanish.
  if (std::abs(rho(3, 3)) <= numerics.atol) {
    out.subspace = Subspace::Span000110;
  } else if (std::abs(rho(0, 0)) <= numerics.atol) {
    out.subspace = Subspace::Span011011;
  }
  out.holds = out.subspace != Subspace::None && std::abs(out.lhs - out.rhs) <= numerics.atol;
  return out;
}

}  // namespace swapurify

#endif  // SWAPURIFY_PROTOCOL_HPP
