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
#include <random>

#include "catch_amalgamated.hpp"
#include "swapurify/channels.hpp"
#include "swapurify/entanglement.hpp"
#include "swapurify/random.hpp"

using namespace swapurify;
using Catch::Approx;

TEST_CASE("concurrence of reference states") {
  for (BellLabel l : kBellLabels) CHECK(concurrence(to_density(bell(l))).value == Approx(1.0));
  CHECK(concurrence(basis_state(2, 1)).value == 0.0);
  CHECK(concurrence(DensityMatrix::maximally_mixed(2)).value == 0.0);
  CHECK_THROWS_AS(concurrence(DensityMatrix::maximally_mixed(3)), std::invalid_argument);
}

TEST_CASE("Werner states follow max(0, 2F - 1)") {
  const ComplexMatrix singlet = to_density(bell(BellLabel::PsiMinus)).matrix();
  const ComplexMatrix rest = (ComplexMatrix::identity(4) - singlet) / Complex(3.0);
  for (double f : {0.1, 0.25, 0.5, 0.6, 0.8, 0.95, 1.0}) {
    const DensityMatrix w(singlet * Complex(f) + rest * Complex(1.0 - f));
    CHECK(concurrence(w).value == Approx(std::max(0.0, 2.0 * f - 1.0)).margin(1e-10));
  }
}

TEST_CASE("pure-state concurrence equals 2|ad - bc|") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const auto psi = random_pure_state(rng, 2);
    const auto v = psi.amplitudes();
    const double expected = 2.0 * std::abs(v[0] * v[3] - v[1] * v[2]);
    CHECK(concurrence(to_density(psi)).value == Approx(expected).margin(1e-9));
  }
}

TEST_CASE("concurrence is invariant under local unitaries and bounded") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 100; ++i) {
    const auto rho = random_density_matrix(rng, 2, 1 + static_cast<std::size_t>(i % 3));
    const ComplexMatrix u = kron(random_unitary_2x2(rng), random_unitary_2x2(rng));
    const ComplexMatrix rotated = u * rho.matrix() * dagger(u);
    const DensityMatrix r2((rotated + dagger(rotated)) * Complex(0.5));
    const double c = concurrence(rho).value;
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
    CHECK(concurrence(r2).value == Approx(c).margin(1e-9));
  }
}

TEST_CASE("local damping never increases concurrence") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 50; ++i) {
    const auto rho = random_density_matrix(rng, 2, 2);
    const auto damped = apply_local_pair(amplitude_damping(0.3), rho);
    CHECK(concurrence(damped).value <= concurrence(rho).value + 1e-9);
  }
}

TEST_CASE("closed-form concurrences at a = 0.3, p = 0.1, b = 0.22") {
  CHECK(concurrence_phi_initial(0.3, 0.1) == Approx(0.824863625092).epsilon(1e-11));
  CHECK(concurrence_phi_round1(0.3, 0.1) == Approx(0.863013698630).epsilon(1e-11));
  CHECK(concurrence_phi_round2(0.3, 0.1, 0.22) == Approx(0.4914 / 0.5354).epsilon(1e-12));
  CHECK(probability_phi_round2(0.3, 0.1, 0.22) == Approx(0.005409649476).epsilon(1e-9));
  const double expected[] = {0.863013698630, 0.917818453493, 0.951918778499,
                             0.972296639302, 0.984181441064, 0.991014754658};
  for (int n = 1; n <= 6; ++n) {
    CHECK(concurrence_phi_roundn(0.3, 0.1, 0.22, n) == Approx(expected[n - 1]).epsilon(1e-11));
  }
}

TEST_CASE("round monomials agree with the log-space ratio") {
  for (int n = 1; n <= 5; ++n) {
    const RoundWeights w = phi_round_weights(n);
    const double direct = evaluate(w.vacuum, 0.3, 0.1, 0.22) / (2.0 * evaluate(w.coherent, 0.3, 0.1, 0.22));
    CHECK(phi_round_vacuum_ratio(0.3, 0.1, 0.22, n) == Approx(direct).epsilon(1e-12));
  }
  CHECK_THROWS_AS(phi_round_weights(0), std::invalid_argument);
  CHECK_THROWS_AS(phi_round_weights(61), std::invalid_argument);
  // Deep rounds stay finite where the monomials themselves underflow.
  const double c60 = concurrence_phi_roundn(0.3, 0.1, 0.22, 60);
  CHECK(std::isfinite(c60));
  CHECK(c60 == Approx(1.0));
  CHECK(concurrence_phi_roundn(0.3, 0.0, 0.22, 3) == 1.0);
}

TEST_CASE("closed-form guards reject degenerate parameters") {
  CHECK_THROWS_AS(concurrence_phi_round1(0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(concurrence_phi_round1(0.3, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(concurrence_phi_round2(0.3, 0.1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(concurrence_phi_initial(1.2, 0.1), std::invalid_argument);
}

TEST_CASE("singlet fraction of reference states") {
  CHECK(singlet_fraction(to_density(bell(BellLabel::PsiMinus))) == Approx(1.0));
  CHECK(singlet_fraction(to_density(bell(BellLabel::PhiPlus))) == Approx(1.0));
  CHECK(singlet_fraction(basis_state(2, 0)) == Approx(0.5));
  CHECK(singlet_fraction(DensityMatrix::maximally_mixed(2)) == Approx(0.25));
  // Phase-rotated maximally entangled state: still 1.
  const double h = 1.0 / std::sqrt(2.0);
  const PureState rotated(2, {0.0, Complex(h, 0.0), Complex(0.0, h), 0.0});
  CHECK(singlet_fraction(to_density(rotated)) == Approx(1.0));
}
