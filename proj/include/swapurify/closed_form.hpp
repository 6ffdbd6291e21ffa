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

#ifndef SWAPURIFY_CLOSED_FORM_HPP
#define SWAPURIFY_CLOSED_FORM_HPP

/// \file
/// Analytic post-measurement states of the purification protocol. These are
/// cross-checked against the simulator in the tests and never used by it.
/// `sign` is +1 for the Psi+ Bell outcome and -1 for Psi-.

#include <cmath>
#include <stdexcept>

#include "swapurify/entanglement.hpp"
#include "swapurify/qmat.hpp"

namespace swapurify::closed_form {

namespace detail {

inline ComplexMatrix x_state(double d00, double d01, double d10, double d11, double c0110,
                             double c0011 = 0.0) {
  ComplexMatrix m(4, 4);
  m(0, 0) = d00;
  m(1, 1) = d01;
  m(2, 2) = d10;
  m(3, 3) = d11;
  m(1, 2) = m(2, 1) = c0110;
  m(0, 3) = m(3, 0) = c0011;
  return m;
}

inline ComplexMatrix normalized(ComplexMatrix m) {
  const double tr = m.trace().real();
  if (!(tr > 0.0)) throw std::invalid_argument("closed form has zero weight at these parameters");
  return m / Complex(tr);
}

inline void require_sign(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
}

}  // namespace detail

/// p|00><00| + (1-p)|phi><phi|, phi = sqrt(a)|01> + sqrt(1-a)|10>.
inline ComplexMatrix phi_damped(double a, double p) {
  const double c = (1.0 - p) * std::sqrt(a * (1.0 - a));
  return detail::x_state(p, (1.0 - p) * a, (1.0 - p) * (1.0 - a), 0.0, c);
}

/// Damped flipped pair: p|00><00| + (1-p)|phi~><phi~|.
inline ComplexMatrix phi_flipped_damped(double a, double p) {
  const double c = (1.0 - p) * std::sqrt(a * (1.0 - a));
  return detail::x_state(p, (1.0 - p) * (1.0 - a), (1.0 - p) * a, 0.0, c);
}

/// (2p(1-p)a |00><00| + 2(1-p)^2 a(1-a) |Psi+-><Psi+-|) / N
inline ComplexMatrix phi_swapped(double a, double p, int sign) {
  detail::require_sign(sign);
  const double w = (1.0 - p) * (1.0 - p) * a * (1.0 - a);  // 2w |Psi><Psi| has diagonal w, w
  return detail::normalized(detail::x_state(2.0 * p * (1.0 - p) * a, w, w, 0.0, sign * w));
}

/// N/2 per Psi outcome.
inline double phi_swap_probability(double a, double p) {
  return (1.0 - p) * (1.0 - p) * a * (1.0 - a) + p * (1.0 - p) * a;
}

/// Swap of pairs with different weights a (first) and a' (flipped second).
inline ComplexMatrix phi_asym_swapped(double a, double a_prime, double p, int sign) {
  detail::require_sign(sign);
  const double q2 = (1.0 - p) * (1.0 - p);
  return detail::normalized(detail::x_state(
      p * (1.0 - p) * (a + a_prime), q2 * a * (1.0 - a_prime), q2 * a_prime * (1.0 - a), 0.0,
      sign * q2 * std::sqrt(a * a_prime * (1.0 - a) * (1.0 - a_prime))));
}

/// M/2 per Psi outcome, M = p(1-p)(a+a') + (1-p)^2 (a'(1-a) + a(1-a')).
inline double phi_asym_swap_probability(double a, double a_prime, double p) {
  const double m = p * (1.0 - p) * (a + a_prime) +
                   (1.0 - p) * (1.0 - p) * (a_prime * (1.0 - a) + a * (1.0 - a_prime));
  return m / 2.0;
}

/// M+ on qubit A of the swapped state:
/// (2p(1-p)ab |00><00| + (1-p)^2 a(1-a) |v><v|) / N', v = sqrt(b)|01> + sqrt(1-b)|10>.
inline ComplexMatrix phi_weak_filtered(double a, double p, double b, int sign) {
  detail::require_sign(sign);
  const double w = (1.0 - p) * (1.0 - p) * a * (1.0 - a);
  return detail::normalized(detail::x_state(2.0 * p * (1.0 - p) * a * b, w * b, w * (1.0 - b),
                                            0.0, sign * w * std::sqrt(b * (1.0 - b))));
}

/// M+ on qubit C: same weights with v~ = sqrt(b)|10> + sqrt(1-b)|01>.
inline ComplexMatrix phi_weak_filtered_flipped(double a, double p, double b, int sign) {
  detail::require_sign(sign);
  const double w = (1.0 - p) * (1.0 - p) * a * (1.0 - a);
  return detail::normalized(detail::x_state(2.0 * p * (1.0 - p) * a * b, w * (1.0 - b), w * b,
                                            0.0, sign * w * std::sqrt(b * (1.0 - b))));
}

/// p' = N'/N, conditional probability of the M+ branch.
inline double phi_weak_probability(double a, double p, double b) {
  const double num = 2.0 * p * (1.0 - p) * a * b + (1.0 - p) * (1.0 - p) * a * (1.0 - a);
  const double den = 2.0 * p * (1.0 - p) * a + 2.0 * (1.0 - p) * (1.0 - p) * a * (1.0 - a);
  return num / den;
}

/// State after n rounds (M+ on both copies, Psi branch every round).
inline ComplexMatrix phi_round_state(double a, double p, double b, int n, int sign) {
  detail::require_sign(sign);
  const double r = phi_round_vacuum_ratio(a, p, b, n);  // a_n / (2 b_n)
  const double z = 1.0 / (1.0 + r);
  return detail::x_state(r * z, 0.5 * z, 0.5 * z, 0.0, sign * 0.5 * z);
}

/// chi pair sqrt(A)|00> + sqrt(1-A)|11> through local damping on both qubits.
inline ComplexMatrix chi_damped(double big_a, double p) {
  const double na = 1.0 - big_a;
  return detail::x_state(big_a + na * p * p, na * p * (1.0 - p), na * p * (1.0 - p),
                         na * (1.0 - p) * (1.0 - p), 0.0, (1.0 - p) * std::sqrt(big_a * na));
}

namespace detail {

struct ChiWeights {
  double d00, d01, d11, coherence;
};

// Unnormalized Psi-branch weights of the swapped chi pair; the trace of the
// resulting matrix is twice the single-outcome probability.
inline ChiWeights chi_swap_weights(double big_a, double p) {
  const double na = 1.0 - big_a;
  const double q = 1.0 - p;
  return {2.0 * na * p * q * (big_a + na * p * p), na * q * q * (big_a + 2.0 * na * p * p),
          2.0 * na * na * p * q * q * q, na * big_a * q * q};
}

}  // namespace detail

inline ComplexMatrix chi_swapped(double big_a, double p, int sign) {
  detail::require_sign(sign);
  const auto w = detail::chi_swap_weights(big_a, p);
  return detail::normalized(detail::x_state(w.d00, w.d01, w.d01, w.d11, sign * w.coherence));
}

/// Probability of one Psi outcome when swapping two damped chi pairs.
inline double chi_swap_probability(double big_a, double p) {
  const auto w = detail::chi_swap_weights(big_a, p);
  return (w.d00 + 2.0 * w.d01 + w.d11) / 2.0;
}

/// M+ on both qubits of the swapped chi state. |00> scales by b^2, |11> by
/// (1-b)^2, and the whole {|01>,|10>} block, coherence included, by b(1-b).
inline ComplexMatrix chi_weak_filtered(double big_a, double p, double b, int sign) {
  detail::require_sign(sign);
  const auto w = detail::chi_swap_weights(big_a, p);
  const double bb = b * (1.0 - b);
  return detail::normalized(detail::x_state(b * b * w.d00, bb * w.d01, bb * w.d01,
                                            (1.0 - b) * (1.0 - b) * w.d11,
                                            sign * bb * w.coherence));
}

/// Conditional probability of the M+ M+ outcome on the swapped chi state.
inline double chi_weak_probability(double big_a, double p, double b) {
  const auto w = detail::chi_swap_weights(big_a, p);
  const double bb = b * (1.0 - b);
  return (b * b * w.d00 + 2.0 * bb * w.d01 + (1.0 - b) * (1.0 - b) * w.d11) /
         (w.d00 + 2.0 * w.d01 + w.d11);
}

}  // namespace swapurify::closed_form

#endif  // SWAPURIFY_CLOSED_FORM_HPP
