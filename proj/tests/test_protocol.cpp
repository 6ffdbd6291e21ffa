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

#include <cmath>
#include <set>

#include "catch_amalgamated.hpp"
#include "swapurify/closed_form.hpp"
#include "swapurify/protocol.hpp"
#include "swapurify/verify.hpp"

using namespace swapurify;
using Catch::Approx;

namespace {

ProtocolConfig phi(double a, double p, double b = 0.22, int rounds = 1) {
  ProtocolConfig c;
  c.family = Family::Phi;
  c.a = a;
  c.p = p;
  c.b = b;
  c.rounds = rounds;
  return c;
}

ProtocolConfig chi(double big_a, double p, double b, WeakPolicy w) {
  ProtocolConfig c;
  c.family = Family::Chi;
  c.big_a = big_a;
  c.p = p;
  c.b = b;
  c.weak_policy = w;
  return c;
}

}  // namespace

TEST_CASE("noisy pairs") {
  const auto pairs = prepare_noisy_pairs(phi(0.3, 0.1));
  CHECK(pairs.first(0, 0).real() == Approx(0.1));
  CHECK(pairs.first(1, 1).real() == Approx(0.9 * 0.3));
  CHECK(pairs.second(2, 2).real() == Approx(0.9 * 0.3));
  const auto pure = prepare_noisy_pairs(phi(0.3, 0.0));
  CHECK(pure.first.purity() == Approx(1.0));
  const auto chis = prepare_noisy_pairs(chi(0.9, 0.1, 0.25, WeakPolicy::None));
  CHECK(chis.first(0, 0).real() == Approx(0.901));
  CHECK(chis.first(1, 1).real() == Approx(0.009));
  CHECK(chis.first(3, 3).real() == Approx(0.081));
  CHECK(chis.first(0, 3).real() == Approx(0.27));
  ProtocolConfig bad = phi(0.3, 0.1);
  bad.p = 1.5;
  CHECK_THROWS_AS(prepare_noisy_pairs(bad), std::invalid_argument);
}

TEST_CASE("one swap at a = 0.3, p = 0.1") {
  const auto out = swap_round(prepare_noisy_pairs(phi(0.3, 0.1)),
                              {BellLabel::PsiPlus, BellLabel::PsiMinus});
  REQUIRE(out.size() == 2);
  CHECK(out[0].branch_label == "Psi+");
  CHECK(out[1].branch_label == "Psi-");
  for (const auto& r : out) {
    CHECK(r.branch_probability == Approx(0.1971).epsilon(1e-12));
    CHECK(r.accepted_probability == Approx(0.3942).epsilon(1e-12));
    CHECK(r.concurrence == Approx(0.863013698630).epsilon(1e-11));
  }
  CHECK(out[0].state(1, 2).real() > 0.0);
  CHECK(out[1].state(1, 2).real() < 0.0);
  // The Psi block is rank one, so the purifiability condition holds.
  const auto check = purifiability_condition(out[0].state);
  CHECK(check.holds);
  CHECK(check.subspace == Subspace::Span000110);
}

TEST_CASE("Phi outcomes of the swap do not enhance") {
  const auto out = swap_round(prepare_noisy_pairs(phi(0.3, 0.1)),
                              {BellLabel::PhiPlus, BellLabel::PhiMinus});
  REQUIRE(out.size() == 2);
  for (const auto& r : out) {
    CHECK(r.branch_probability == Approx(0.3029).epsilon(1e-12));
    CHECK(r.concurrence == Approx(0.35358).margin(1e-5));
  }
}

TEST_CASE("weak preprocessing of the swapped state") {
  const auto swapped = swap_round(prepare_noisy_pairs(phi(0.3, 0.1)), {BellLabel::PsiPlus});
  const auto out = weak_preprocess(swapped[0].state, {{0, WeakSign::Plus}}, 0.22);
  CHECK(out.probability == Approx(0.461643835616).epsilon(1e-11));
  CHECK(max_abs_diff(out.post_state->matrix(), closed_form::phi_weak_filtered(0.3, 0.1, 0.22, 1)) <
        1e-14);
  const auto both = weak_preprocess(swapped[0].state, {{0, WeakSign::Plus}, {1, WeakSign::Minus}},
                                    0.5);
  CHECK(both.probability == Approx(0.25));
  CHECK(both.label == "M+M-");
  CHECK_THROWS_AS(weak_preprocess(swapped[0].state, {{0, WeakSign::Plus}}, 1.0),
                  std::invalid_argument);
}

TEST_CASE("multi-round run matches the closed forms") {
  const ProtocolRun run = run_protocol(phi(0.3, 0.1, 0.22, 6));
  REQUIRE(run.ok());
  CHECK(run.initial_concurrence == Approx(0.824863625092).epsilon(1e-11));
  REQUIRE(run.rounds.size() == 6);
  for (const auto& r : run.rounds) {
    CHECK(r.concurrence == Approx(concurrence_phi_roundn(0.3, 0.1, 0.22, r.round_index)).epsilon(1e-10));
    CHECK(max_abs_diff(r.state.matrix(),
                       closed_form::phi_round_state(0.3, 0.1, 0.22, r.round_index, 1)) < 1e-9);
  }
  CHECK(run.rounds[1].branch_label == "M+/M+ Psi+");
  CHECK(run.rounds[1].concurrence == Approx(0.4914 / 0.5354).epsilon(1e-12));
  // Paper probability of the second-round state: both round-one Psi outcomes
  // accepted, both weak branches, one round-two Bell outcome.
  const double n1 = run.rounds[0].accepted_probability;
  CHECK(n1 * n1 * run.rounds[1].branch_probability == Approx(0.005409649476).epsilon(1e-9));
  CHECK(run.rounds[1].branch_probability / run.rounds[1].weak_probability ==
        Approx(0.163351002474).epsilon(1e-10));
}

TEST_CASE("cumulative probability is positive and nonincreasing") {
  for (double a : {0.1, 0.3, 0.45}) {
    for (double p : {0.05, 0.2, 0.4}) {
      const ProtocolRun run = run_protocol(phi(a, p, 0.22, 5));
      REQUIRE(run.ok());
      double prev = 1.0;
      for (const auto& r : run.rounds) {
        CHECK(r.cumulative_probability > 0.0);
        CHECK(r.cumulative_probability <= prev);
        CHECK(std::log(r.cumulative_probability) == Approx(r.log_cumulative_probability));
        CHECK(r.expected_pairs >= 2.0);
        prev = r.cumulative_probability;
      }
    }
  }
}

TEST_CASE("degenerate inputs return a typed outcome") {
  for (const auto& cfg : {phi(0.0, 0.1), phi(1.0, 0.1), phi(0.3, 1.0)}) {
    const ProtocolRun run = run_protocol(cfg);
    CHECK(run.status == RunStatus::NoEntanglement);
    CHECK(run.rounds.empty());
    CHECK_FALSE(run.diagnostic.empty());
    CHECK_FALSE(is_enhanced(run, RegionCriterion::Chain));
  }
  ProtocolConfig none = phi(0.3, 0.1);
  none.rounds = 0;
  CHECK_THROWS_AS(run_protocol(none), std::invalid_argument);
  none.rounds = 2;
  none.b = 0.0;
  CHECK_THROWS_AS(run_protocol(none), std::invalid_argument);
  none.accepted.clear();
  CHECK_THROWS_AS(run_protocol(none), std::invalid_argument);
}

TEST_CASE("second round without weak measurement does not enhance") {
  ProtocolConfig cfg = phi(0.3, 0.1, 0.22, 2);
  cfg.weak_policy = WeakPolicy::None;
  const ProtocolRun run = run_protocol(cfg);
  REQUIRE(run.ok());
  CHECK(run.rounds[1].concurrence < run.rounds[0].concurrence);
}

TEST_CASE("threshold report at the quoted strengths") {
  const auto low = threshold_checks(0.3, 0.1, 0.22);
  CHECK(low.outcomes[0].enhanced);
  CHECK_FALSE(low.outcomes[1].enhanced);
  CHECK_FALSE(low.outcomes[2].enhanced);
  CHECK_FALSE(low.outcomes[3].enhanced);
  const auto high = threshold_checks(0.3, 0.1, 0.8);
  CHECK_FALSE(high.outcomes[0].enhanced);
  CHECK(high.outcomes[1].enhanced);
  // b = 1/2 with both M-: below the 2/3 threshold.
  const auto half = threshold_checks(0.3, 0.1, 0.5);
  CHECK(half.outcomes[1].concurrence_round2 == Approx(0.759).margin(1e-3));
  CHECK_FALSE(half.outcomes[1].enhanced);
}

TEST_CASE("chi family with and without the weak step") {
  const ProtocolRun plain = run_protocol(chi(0.9, 0.1, 0.25, WeakPolicy::None));
  REQUIRE(plain.ok());
  CHECK(plain.initial_concurrence == Approx(0.522));
  CHECK(plain.rounds[0].concurrence == Approx(0.83074).margin(1e-5));
  CHECK(plain.rounds[0].branch_probability == Approx(0.0819).epsilon(1e-12));
  CHECK(plain.rounds[0].accepted_probability == Approx(0.1638).epsilon(1e-12));
  CHECK(max_abs_diff(plain.rounds[0].state.matrix(), closed_form::chi_swapped(0.9, 0.1, 1)) < 1e-12);

  const ProtocolRun weak = run_protocol(chi(0.9, 0.1, 0.25, WeakPolicy::BothPlus));
  REQUIRE(weak.ok());
  CHECK(weak.rounds[0].swap_concurrence == Approx(0.83074).margin(1e-5));
  CHECK(weak.rounds[0].concurrence == Approx(0.87281).margin(1e-5));

  const ProtocolRun strong = run_protocol(chi(0.9, 0.5, 0.25, WeakPolicy::BothPlus));
  CHECK(strong.initial_concurrence == Approx(0.25));
  CHECK(strong.rounds[0].swap_concurrence == Approx(0.3136).margin(1e-4));
  CHECK(strong.rounds[0].concurrence == Approx(0.4469).margin(1e-4));
}

TEST_CASE("asymmetric pairs use the printed sign convention") {
  ProtocolConfig cfg = phi(0.3, 0.1);
  cfg.family = Family::PhiAsym;
  cfg.a_prime = 0.45;
  const auto out = swap_round(prepare_noisy_pairs(cfg), {BellLabel::PsiMinus});
  REQUIRE(out.size() == 1);
  CHECK(out[0].branch_probability ==
        Approx(closed_form::phi_asym_swap_probability(0.3, 0.45, 0.1)).epsilon(1e-12));
  CHECK(out[0].branch_probability == Approx(0.22815).epsilon(1e-10));
  CHECK(out[0].state(1, 2).real() < 0.0);
}

TEST_CASE("inputs with singlet fraction at most 1/2 are still purified") {
  const ProtocolRun run = run_protocol(phi(0.1, 0.5));
  const auto pairs = prepare_noisy_pairs(phi(0.1, 0.5));
  CHECK(singlet_fraction(pairs.first) <= 0.5);
  CHECK(is_enhanced(run, RegionCriterion::Chain));
}

TEST_CASE("every operation acts on one node's qubits") {
  const ProtocolRun run = run_protocol(phi(0.3, 0.1, 0.22, 3));
  REQUIRE(run.ok());
  std::set<std::string> kinds;
  for (const auto& op : run.operations) {
    kinds.insert(op.kind);
    REQUIRE(op.qubits.size() == op.owners.size());
    std::set<std::string> owners(op.owners.begin(), op.owners.end());
    CHECK(owners.size() == 1);  // local to a single party
    if (op.kind == "bell") CHECK(*owners.begin() == "Bob");
    if (op.kind == "weak") CHECK(op.qubits.size() == 1);
  }
  CHECK(kinds == std::set<std::string>{"bell", "channel", "weak"});
}

TEST_CASE("purifiability predicate") {
  CHECK_FALSE(purifiability_condition(DensityMatrix::maximally_mixed(2)).holds);
  CHECK(purifiability_condition(DensityMatrix::maximally_mixed(2)).subspace == Subspace::None);
  const DensityMatrix diag(ComplexMatrix::diagonal({0.5, 0.25, 0.25, 0.0}));
  const auto c = purifiability_condition(diag);
  CHECK(c.subspace == Subspace::Span000110);
  CHECK(c.lhs == Complex(1.0 / 16.0));
  CHECK_FALSE(c.holds);
  const DensityMatrix upper(ComplexMatrix::diagonal({0.0, 0.5, 0.0, 0.5}));
  CHECK(purifiability_condition(upper).subspace == Subspace::Span011011);
  CHECK(purifiability_condition(upper).holds);
}

TEST_CASE("region scan is independent of the worker count") {
  const Grid2D grid{{Parameter::P, 0.0, 1.0, 9}, {Parameter::A_phi, 0.0, 1.0, 7}};
  const auto one = enhancement_region(phi(0.3, 0.1), grid, RegionCriterion::Chain, 1);
  const auto four = enhancement_region(phi(0.3, 0.1), grid, RegionCriterion::Chain, 4);
  REQUIRE(one.points.size() == 63);
  for (std::size_t i = 0; i < one.points.size(); ++i) {
    CHECK(one.points[i].x == four.points[i].x);
    CHECK(one.points[i].c_final == four.points[i].c_final);
    CHECK(one.points[i].enhanced == four.points[i].enhanced);
  }
  CHECK(one.at(1, 1).x == 0.125);
  CHECK(one.at(1, 1).y == Approx(1.0 / 6.0));
  CHECK(one.at(1, 1).enhanced);  // a = 1/6 <= 0.2
  CHECK_THROWS_AS(enhancement_region(phi(0.3, 0.1), Grid2D{{Parameter::P, 0, 1, 1}, {Parameter::A_phi, 0, 1, 3}},
                                     RegionCriterion::Chain),
                  std::invalid_argument);
  CHECK_THROWS_AS(enhancement_region(phi(0.3, 0.1), Grid2D{{Parameter::P, 0, 1, 3}, {Parameter::P, 0, 1, 3}},
                                     RegionCriterion::Chain),
                  std::invalid_argument);
}

TEST_CASE("final-versus-initial region grows with the round count") {
  const Grid2D grid{{Parameter::P, 0.0, 1.0, 21}, {Parameter::A_phi, 0.0, 1.0, 21}};
  const auto n1 = enhancement_region(phi(0.3, 0.1, 0.22, 1), grid, RegionCriterion::FinalVsInitial);
  const auto n2 = enhancement_region(phi(0.3, 0.1, 0.22, 2), grid, RegionCriterion::FinalVsInitial);
  const auto n3 = enhancement_region(phi(0.3, 0.1, 0.22, 3), grid, RegionCriterion::FinalVsInitial);
  CHECK(n1.enhanced_count() < n2.enhanced_count());
  CHECK(n2.enhanced_count() < n3.enhanced_count());
  for (std::size_t i = 0; i < n1.points.size(); ++i) {
    if (n1.points[i].enhanced) CHECK(n2.points[i].enhanced);
  }
}

TEST_CASE("verification suites pass") {
  CHECK(verify_kraus().passed);
  CHECK(verify_asymptotic().passed);
  VerifyGrid small;
  small.weights = {0.25, 0.5};
  small.dampings = {0.125, 0.75};
  CHECK(verify_closed_forms(small).passed);
  CHECK(verify_thresholds(small).passed);
  CHECK(verify_tradeoff(small).passed);
}
