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

#ifndef SWAPURIFY_VERIFY_HPP
#define SWAPURIFY_VERIFY_HPP

/// \file
/// Self-checks comparing the simulator with the analytic results. Each suite
/// returns a report instead of throwing so callers can print every failure.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "swapurify/channels.hpp"
#include "swapurify/closed_form.hpp"
#include "swapurify/entanglement.hpp"
#include "swapurify/protocol.hpp"
#include "swapurify/random.hpp"
#include "swapurify/report.hpp"

namespace swapurify {

struct VerifyReport {
  std::string name;
  bool passed = true;
  double max_deviation = 0.0;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  /// Records |deviation| against `tol`; `where` names the offending point.
  void check(double deviation, double tol, const std::string& where) {
    ++checks;
    deviation = std::abs(deviation);
    if (!(deviation <= tol)) {
      passed = false;
      if (failures.size() < 20) {
        failures.push_back(where + ": deviation " + format_number(deviation) + " > " +
                           format_number(tol));
      }
    }
    if (std::isfinite(deviation)) max_deviation = std::max(max_deviation, deviation);
  }

  void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      passed = false;
      if (failures.size() < 20) failures.push_back(what);
    }
  }

  void merge(const VerifyReport& other) {
    passed = passed && other.passed;
    max_deviation = std::max(max_deviation, other.max_deviation);
    checks += other.checks;
    for (const auto& f : other.failures) {
      if (failures.size() < 20) failures.push_back(other.name + ": " + f);
    }
    for (const auto& n : other.notes) notes.push_back(other.name + ": " + n);
  }
};

/// {1/16, ..., 15/16}: exact binary fractions inside (0, 1).
inline std::vector<double> sixteenths() {
  std::vector<double> g;
  for (int i = 1; i <= 15; ++i) g.push_back(i / 16.0);
  return g;
}

struct VerifyGrid {
  std::vector<double> weights = sixteenths();  // a, a' and A
  std::vector<double> dampings = sixteenths();  // p
  std::vector<double> strengths = {0.1, 0.22, 1.0 / 3.0, 0.4};
};

namespace detail {

inline ProtocolConfig config(Family family, double a, double p) {
  ProtocolConfig cfg;
  cfg.family = family;
  cfg.a = a;
  cfg.big_a = a;
  cfg.p = p;
  return cfg;
}

inline std::string at(std::initializer_list<std::pair<const char*, double>> params) {
  std::string s = "(";
  bool first = true;
  for (const auto& [k, v] : params) {
    s += (first ? "" : ", ") + std::string(k) + "=" + format_number(v);
    first = false;
  }
  return s + ")";
}

}  // namespace detail

/// Kraus completeness of the damping channel and trace preservation on
/// random two-qubit states, channel applied to each qubit and to both.
inline VerifyReport verify_kraus(std::uint64_t seed = 20260101, int samples = 100) {
  VerifyReport r;
  r.name = "kraus";
  std::mt19937_64 rng(seed);
  std::vector<DensityMatrix> states;
  for (int i = 0; i < samples; ++i) states.push_back(random_density_matrix(rng, 2));
  for (double p : {0.0, 0.1, 0.5, 0.9, 1.0}) {
    const KrausChannel ch = amplitude_damping(p);
    r.check(ch.completeness_error(), 1e-12, "completeness " + detail::at({{"p", p}}));
    for (std::size_t i = 0; i < states.size(); ++i) {
      const std::string where = detail::at({{"p", p}, {"sample", static_cast<double>(i)}});
      for (int q = 0; q < 2; ++q) {
        r.check(apply(ch, states[i], q).matrix().trace().real() - 1.0, 1e-10, "trace " + where);
      }
      r.check(apply_local_pair(ch, states[i]).matrix().trace().real() - 1.0, 1e-10,
              "trace (both qubits) " + where);
    }
  }
  return r;
}

/// Every analytic state, probability and concurrence against the simulator.
inline VerifyReport verify_closed_forms(const VerifyGrid& grid = {}, double tol = 1e-9) {
  namespace cf = closed_form;
  VerifyReport r;
  r.name = "closedforms";
  const std::vector<BellLabel> psi = {BellLabel::PsiPlus, BellLabel::PsiMinus};
  double printed_eq7_deviation = 0.0;

  for (double a : grid.weights) {
    for (double p : grid.dampings) {
      const std::string ap = detail::at({{"a", a}, {"p", p}});
      const ProtocolConfig cfg = detail::config(Family::Phi, a, p);
      const auto pairs = prepare_noisy_pairs(cfg);
      r.check(max_abs_diff(pairs.first.matrix(), cf::phi_damped(a, p)), tol, "rho_AB " + ap);
      r.check(max_abs_diff(pairs.second.matrix(), cf::phi_flipped_damped(a, p)), tol,
              "rho_BC " + ap);

      const auto swapped = swap_round(pairs, psi);
      r.require(swapped.size() == 2, "both Psi outcomes present " + ap);
      if (swapped.size() != 2) continue;
      for (std::size_t s = 0; s < 2; ++s) {
        const int sign = s == 0 ? 1 : -1;
        const std::string where = ap + " " + swapped[s].branch_label;
        r.check(max_abs_diff(swapped[s].state.matrix(), cf::phi_swapped(a, p, sign)), tol,
                "swapped state " + where);
        r.check(swapped[s].branch_probability - cf::phi_swap_probability(a, p), tol,
                "swap probability " + where);
        r.check(swapped[s].concurrence - concurrence_phi_round1(a, p), tol,
                "round-1 concurrence " + where);

        for (double b : grid.strengths) {
          const std::string wb = where + " " + detail::at({{"b", b}});
          const auto on_a = weak_preprocess(swapped[s].state, {{0, WeakSign::Plus}}, b);
          const auto on_c = weak_preprocess(swapped[s].state, {{1, WeakSign::Plus}}, b);
          r.check(max_abs_diff(on_a.post_state->matrix(), cf::phi_weak_filtered(a, p, b, sign)),
                  tol, "M+ on A " + wb);
          r.check(max_abs_diff(on_c.post_state->matrix(),
                               cf::phi_weak_filtered_flipped(a, p, b, sign)),
                  tol, "M+ on C " + wb);
          r.check(on_a.probability - cf::phi_weak_probability(a, p, b), tol, "p' on A " + wb);
          r.check(on_c.probability - cf::phi_weak_probability(a, p, b), tol, "p' on C " + wb);
        }
      }

      for (double a2 : grid.weights) {
        ProtocolConfig asym = detail::config(Family::PhiAsym, a, p);
        asym.a_prime = a2;
        const auto out = swap_round(prepare_noisy_pairs(asym), psi);
        const std::string where = detail::at({{"a", a}, {"a'", a2}, {"p", p}});
        r.require(out.size() == 2, "asymmetric swap outcomes present " + where);
        for (std::size_t s = 0; s < out.size(); ++s) {
          r.check(max_abs_diff(out[s].state.matrix(),
                               cf::phi_asym_swapped(a, a2, p, s == 0 ? 1 : -1)),
                  tol, "asymmetric swap " + where + " " + out[s].branch_label);
          r.check(out[s].branch_probability - cf::phi_asym_swap_probability(a, a2, p), tol,
                  "asymmetric probability " + where);
        }
      }

      for (double b : grid.strengths) {
        for (BellLabel tracked : psi) {
          const int sign = tracked == BellLabel::PsiPlus ? 1 : -1;
          ProtocolConfig multi = detail::config(Family::Phi, a, p);
          multi.b = b;
          multi.rounds = 4;
          multi.accepted = {tracked};
          const ProtocolRun run = run_protocol(multi);
          const std::string where = ap + " " + detail::at({{"b", b}}) + " " +
                                    std::string(to_string(tracked));
          r.require(run.ok() && run.rounds.size() == 4, "four rounds completed " + where);
          if (!run.ok()) continue;
          for (int n = 1; n <= 4; ++n) {
            const auto& round = run.rounds[static_cast<std::size_t>(n - 1)];
            const std::string wn = where + " n=" + std::to_string(n);
            r.check(max_abs_diff(round.state.matrix(), cf::phi_round_state(a, p, b, n, sign)), tol,
                    "round state " + wn);
            r.check(round.concurrence - concurrence_phi_roundn(a, p, b, n), tol,
                    "round concurrence " + wn);
          }
          r.check(run.rounds[1].concurrence - concurrence_phi_round2(a, p, b), tol,
                  "second-round concurrence " + where);
          // Both Psi outcomes of round one are accepted in the analytic probability.
          const double n1 = 2.0 * cf::phi_swap_probability(a, p);
          r.check(n1 * n1 * run.rounds[1].branch_probability - probability_phi_round2(a, p, b),
                  tol, "second-round probability " + where);
        }
      }

      // chi family on the same grid, the weight playing the role of A.
      const double big_a = a;
      const std::string Ap = detail::at({{"A", big_a}, {"p", p}});
      ProtocolConfig chi = detail::config(Family::Chi, big_a, p);
      chi.weak_policy = WeakPolicy::None;
      const auto chi_pairs = prepare_noisy_pairs(chi);
      r.check(max_abs_diff(chi_pairs.first.matrix(), cf::chi_damped(big_a, p)), tol,
              "chi_AB " + Ap);
      const auto chi_out = swap_round(chi_pairs, psi);
      r.require(chi_out.size() == 2, "chi Psi outcomes present " + Ap);
      for (std::size_t s = 0; s < chi_out.size(); ++s) {
        const int sign = s == 0 ? 1 : -1;
        r.check(max_abs_diff(chi_out[s].state.matrix(), cf::chi_swapped(big_a, p, sign)), tol,
                "chi swap " + Ap + " " + chi_out[s].branch_label);
        r.check(chi_out[s].branch_probability - cf::chi_swap_probability(big_a, p), tol,
                "chi swap probability " + Ap);
        for (double b : grid.strengths) {
          const std::string wb = Ap + " " + detail::at({{"b", b}});
          const auto filtered = weak_preprocess(
              chi_out[s].state, {{0, WeakSign::Plus}, {1, WeakSign::Plus}}, b);
          r.check(max_abs_diff(filtered.post_state->matrix(),
                               cf::chi_weak_filtered(big_a, p, b, sign)),
                  tol, "chi weak filter " + wb);
          r.check(filtered.probability - cf::chi_weak_probability(big_a, p, b), tol,
                  "chi weak probability " + wb);

          // Informational: the coherence factor sqrt(b(1-b)) as printed.
          ComplexMatrix printed = cf::chi_weak_filtered(big_a, p, b, sign);
          const auto w = cf::detail::chi_swap_weights(big_a, p);
          const double bb = b * (1.0 - b);
          const double norm = b * b * w.d00 + 2.0 * bb * w.d01 + (1.0 - b) * (1.0 - b) * w.d11;
          printed(1, 2) = printed(2, 1) = sign * std::sqrt(bb) * w.coherence / norm;
          printed_eq7_deviation = std::max(printed_eq7_deviation,
                                           max_abs_diff(printed, filtered.post_state->matrix()));
        }
      }
    }
  }
  r.notes.push_back("chi weak-filter coherence printed as sqrt(b(1-b)) deviates from the "
                    "simulator by up to " + format_number(printed_eq7_deviation) +
                    "; the implemented factor b(1-b) matches");
  return r;
}

/// General concurrence of the simulated noisy pairs against 2(1-p)sqrt(a(1-a)).
inline VerifyReport verify_initial_concurrence(const VerifyGrid& grid = {}, double tol = 1e-10) {
  VerifyReport r;
  r.name = "initial-concurrence";
  for (double a : grid.weights) {
    for (double p : grid.dampings) {
      const auto pairs = prepare_noisy_pairs(detail::config(Family::Phi, a, p));
      const double expected = concurrence_phi_initial(a, p);
      const std::string where = detail::at({{"a", a}, {"p", p}});
      r.check(concurrence(pairs.first).value - expected, tol, "C(rho_AB) " + where);
      r.check(concurrence(pairs.second).value - expected, tol, "C(rho_BC) " + where);
    }
  }
  return r;
}

/// C2 * p2 = b(1-b)(1-p)^4 a^2 (1-a)^2 from simulated quantities.
inline VerifyReport verify_tradeoff(const VerifyGrid& grid = {}, double tol = 1e-12) {
  VerifyReport r;
  r.name = "tradeoff";
  for (double a : grid.weights) {
    for (double p : grid.dampings) {
      for (double b : grid.strengths) {
        ProtocolConfig cfg = detail::config(Family::Phi, a, p);
        cfg.b = b;
        cfg.rounds = 2;
        const ProtocolRun run = run_protocol(cfg);
        const std::string where = detail::at({{"a", a}, {"p", p}, {"b", b}});
        r.require(run.ok(), "run completed " + where);
        if (!run.ok()) continue;
        const double n1 = run.rounds[0].accepted_probability;
        const double p2 = n1 * n1 * run.rounds[1].branch_probability;
        const double rhs = b * (1.0 - b) * std::pow(1.0 - p, 4) * a * a * (1.0 - a) * (1.0 - a);
        r.check(run.rounds[1].concurrence * p2 - rhs, tol, "C2*p2 " + where);
      }
    }
  }
  return r;
}

/// Weak-measurement sign thresholds: both-M+ enhances iff b < 1/3, both-M-
/// iff b > 2/3 (with equality at the threshold), mixed signs never.
inline VerifyReport verify_thresholds(const VerifyGrid& grid = {}, double equality_tol = 1e-10) {
  VerifyReport r;
  r.name = "thresholds";
  std::vector<double> strengths = grid.strengths;
  for (double b : grid.strengths) strengths.push_back(1.0 - b);
  for (double a : grid.weights) {
    for (double p : grid.dampings) {
      for (double b : strengths) {
        const ThresholdReport t = threshold_checks(a, p, b);
        const std::string where = detail::at({{"a", a}, {"p", p}, {"b", b}});
        const double c1 = t.concurrence_round1;
        const auto& pp = t.outcomes[0];
        const auto& mm = t.outcomes[1];
        const bool at_third = std::abs(b - 1.0 / 3.0) < 1e-12;
        const bool at_two_thirds = std::abs(b - 2.0 / 3.0) < 1e-12;
        if (at_third) {
          r.check(pp.concurrence_round2 - c1, equality_tol, "both-M+ equality at b=1/3 " + where);
        } else {
          r.require(pp.enhanced == (b < 1.0 / 3.0),
                    "both-M+ enhanced=" + std::to_string(pp.enhanced) + " " + where);
        }
        if (at_two_thirds) {
          r.check(mm.concurrence_round2 - c1, equality_tol, "both-M- equality at b=2/3 " + where);
        } else {
          r.require(mm.enhanced == (b > 2.0 / 3.0),
                    "both-M- enhanced=" + std::to_string(mm.enhanced) + " " + where);
        }
        r.require(!t.outcomes[2].enhanced && !t.outcomes[3].enhanced,
                  "mixed signs enhanced " + where);
      }
    }
  }
  return r;
}

/// Rounds needed for the closed-form concurrence to exceed `target`.
struct AsymptoticTrace {
  double a = 0.0;
  double p = 0.0;
  int rounds_needed = 0;  // 0 when not reached within max_rounds
  std::vector<double> concurrences;
};

inline std::vector<AsymptoticTrace> asymptotic_traces(std::uint64_t seed, int count, double b,
                                                      int max_rounds, double target) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> a_dist(0.05, 0.5);
  std::uniform_real_distribution<double> p_dist(0.05, 0.5);
  std::vector<AsymptoticTrace> out;
  for (int i = 0; i < count; ++i) {
    AsymptoticTrace t;
    t.a = a_dist(rng);
    t.p = p_dist(rng);
    for (int n = 1; n <= max_rounds; ++n) {
      t.concurrences.push_back(concurrence_phi_roundn(t.a, t.p, b, n));
      if (t.concurrences.back() > target) {
        t.rounds_needed = n;
        break;
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

inline VerifyReport verify_asymptotic(std::uint64_t seed = 20260101, int count = 25,
                                      double b = 0.22, int max_rounds = 40,
                                      double target = 0.999) {
  VerifyReport r;
  r.name = "asymptotic";
  int worst = 0;
  for (const auto& t : asymptotic_traces(seed, count, b, max_rounds, target)) {
    std::string trace;
    for (double c : t.concurrences) trace += (trace.empty() ? "" : " ") + format_number(c);
    r.require(t.rounds_needed > 0, "no round reached " + format_number(target) + " at " +
                                       detail::at({{"a", t.a}, {"p", t.p}}) + ": " + trace);
    worst = std::max(worst, t.rounds_needed);
  }
  r.notes.push_back("largest round count needed: " + std::to_string(worst));
  return r;
}

}  // namespace swapurify

#endif  // SWAPURIFY_VERIFY_HPP
