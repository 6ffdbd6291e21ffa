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

#ifndef SWAPURIFY_ENTANGLEMENT_HPP
#define SWAPURIFY_ENTANGLEMENT_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "swapurify/qmat.hpp"
#include "swapurify/states.hpp"

namespace swapurify {

struct ConcurrenceReport {
  double value = 0.0;
  /// Eigenvalues of rho * rho~ after clamping, descending.
  std::array<double, 4> lambdas{};
  /// True when any eigenvalue was clamped to zero.
  bool clamped = false;
};

/// sigma_y (x) sigma_y
inline ComplexMatrix sigma_yy() {
  const ComplexMatrix sy{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
  return kron(sy, sy);
}

/// rho~ = (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y)
inline ComplexMatrix spin_flip(const ComplexMatrix& rho) {
  const ComplexMatrix yy = sigma_yy();
  return yy * conjugate(rho) * yy;
}

/// Wootters concurrence max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)),
/// l_i the eigenvalues of rho * rho~ in decreasing order.
///
/// Eigenvalues below the rounding floor of the product (64 eps ||rho rho~||_F)
/// or negative down to -atol are set to zero; anything more negative, or with
/// an imaginary part above atol, throws NumericsError.
inline ConcurrenceReport concurrence(const DensityMatrix& rho, const Numerics& numerics = {}) {
  if (rho.n_qubits() != 2) throw std::invalid_argument("concurrence needs a 2-qubit state");
  const ComplexMatrix product = rho.matrix() * spin_flip(rho.matrix());
  const auto spectrum = eigenvalues(product, numerics);
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * frobenius_norm(product);

  ConcurrenceReport report;
  for (std::size_t i = 0; i < 4; ++i) {
    const Complex l = spectrum.eigenvalues[i];
    if (std::abs(l.imag()) > numerics.atol) {
      throw NumericsError("rho*rho~ eigenvalue has imaginary part " + std::to_string(l.imag()));
    }
    double v = l.real();
    if (v < -numerics.atol) {
      throw NumericsError("rho*rho~ eigenvalue " + std::to_string(v) +
                          " is below the clamp tolerance");
    }
    if (v <= floor) {
      if (v != 0.0) report.clamped = true;
      v = 0.0;
    }
    report.lambdas[i] = v;
  }
  std::sort(report.lambdas.begin(), report.lambdas.end(), std::greater<>());
  const double c = std::sqrt(report.lambdas[0]) - std::sqrt(report.lambdas[1]) -
                   std::sqrt(report.lambdas[2]) - std::sqrt(report.lambdas[3]);
  report.value = std::clamp(c, 0.0, 1.0);
  return report;
}

/// Largest overlap <e|rho|e> over maximally entangled |e>. Those are the real
/// unit vectors of the magic basis up to phase, so this is the top eigenvalue
/// of Re(rho) expressed in that basis.
inline double singlet_fraction(const DensityMatrix& rho, const Numerics& numerics = {}) {
  if (rho.n_qubits() != 2) throw std::invalid_argument("singlet fraction needs a 2-qubit state");
  const double h = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  // Columns: Phi+, i Phi-, i Psi+, Psi-.
  const ComplexMatrix magic{{h, i * h, 0.0, 0.0},
                            {0.0, 0.0, i * h, h},
                            {0.0, 0.0, i * h, -h},
                            {h, -i * h, 0.0, 0.0}};
  ComplexMatrix in_magic = dagger(magic) * rho.matrix() * magic;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) in_magic(r, c) = in_magic(r, c).real();
  }
  return eigenvalues(in_magic, numerics).eigenvalues.front().real();
}

namespace detail {

inline void require_open_unit(double x, const char* name) {
  if (!(x > 0.0 && x < 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in (0, 1), got " +
                                std::to_string(x));
  }
}

inline void require_damping(double p) {
  if (!(p >= 0.0 && p < 1.0)) {
    throw std::invalid_argument("damping probability must lie in [0, 1), got " +
                                std::to_string(p));
  }
}

}  // namespace detail

/// C(rho_AB) = 2 (1-p) sqrt(a(1-a)) for the damped phi pair.
inline double concurrence_phi_initial(double a, double p) {
  detail::require_weight(a, "a");
  detail::require_weight(p, "p");
  return 2.0 * (1.0 - p) * std::sqrt(a * (1.0 - a));
}

/// Concurrence after one swap, (2/N)(1-p)^2 a(1-a) with
/// N = 2(1-p)^2 a(1-a) + 2p(1-p)a.
inline double concurrence_phi_round1(double a, double p) {
  detail::require_open_unit(a, "a");
  detail::require_damping(p);
  const double n = 2.0 * (1.0 - p) * (1.0 - p) * a * (1.0 - a) + 2.0 * p * (1.0 - p) * a;
  return 2.0 * (1.0 - p) * (1.0 - p) * a * (1.0 - a) / n;
}

/// Second-round concurrence with M+ on both copies:
///   2b(1-b)(1-p)^4 a^2 (1-a)^2 / (4p(1-p)^3 b^2 a^2 (1-a) + 2b(1-b)(1-p)^4 a^2 (1-a)^2).
/// Both-M- is the same expression with b -> 1-b.
inline double concurrence_phi_round2(double a, double p, double b) {
  detail::require_open_unit(a, "a");
  detail::require_damping(p);
  detail::require_open_unit(b, "b");
  const double q = 1.0 - p;
  const double coherent = 2.0 * b * (1.0 - b) * std::pow(q, 4) * a * a * (1.0 - a) * (1.0 - a);
  const double vacuum = 4.0 * p * std::pow(q, 3) * b * b * a * a * (1.0 - a);
  return coherent / (vacuum + coherent);
}

/// Success probability attached to the second-round state,
///   2p(1-p)^3 b^2 a^2 (1-a) + b(1-b)(1-p)^4 a^2 (1-a)^2.
/// In simulator terms this is (P1 * w)^2 * q2: P1 the first-round Psi+/Psi-
/// acceptance probability, w the M+ branch probability of one copy, q2 the
/// probability of a single Bell outcome in round two.
inline double probability_phi_round2(double a, double p, double b) {
  detail::require_open_unit(a, "a");
  detail::require_damping(p);
  detail::require_open_unit(b, "b");
  const double q = 1.0 - p;
  return 2.0 * p * std::pow(q, 3) * b * b * a * a * (1.0 - a) +
         b * (1.0 - b) * std::pow(q, 4) * a * a * (1.0 - a) * (1.0 - a);
}

/// Monomial c * p^e_p b^e_b (1-b)^e_nb (1-p)^e_np a^e_a (1-a)^e_na with
/// exact integer exponents.
struct RoundMonomial {
  double coefficient = 1.0;
  std::int64_t p = 0;
  std::int64_t b = 0;
  std::int64_t one_minus_b = 0;
  std::int64_t one_minus_p = 0;
  std::int64_t a = 0;
  std::int64_t one_minus_a = 0;
};

/// Closed-form n-round weights (M+ on both copies every round, Psi branch):
///   a_n = 2^n p b^(2^(n-1)+n-2) (1-b)^(2^(n-1)-n) (1-p)^(2^n-1) a^(2^(n-1)) (1-a)^(2^(n-1)-1)
///   b_n = b^(2^(n-1)-1) (1-b)^(2^(n-1)-1) (1-p)^(2^n) a^(2^(n-1)) (1-a)^(2^(n-1))
/// with rho^(n) = (a_n |00><00| + 2 b_n |Psi><Psi|) / N^(n).
struct RoundWeights {
  RoundMonomial vacuum;    // a_n
  RoundMonomial coherent;  // b_n
};

inline RoundWeights phi_round_weights(int n) {
  if (n < 1 || n > 60) throw std::invalid_argument("round index must lie in [1, 60]");
  const std::int64_t half = std::int64_t{1} << (n - 1);
  RoundWeights w;
  w.vacuum = {std::ldexp(1.0, n), 1, half + n - 2, half - n, 2 * half - 1, half, half - 1};
  w.coherent = {1.0, 0, half - 1, half - 1, 2 * half, half, half};
  return w;
}

/// Direct evaluation of a monomial; underflows for large exponents.
inline double evaluate(const RoundMonomial& m, double a, double p, double b) {
  auto pw = [](double x, std::int64_t e) { return e == 0 ? 1.0 : std::pow(x, static_cast<double>(e)); };
  return m.coefficient * pw(p, m.p) * pw(b, m.b) * pw(1.0 - b, m.one_minus_b) *
         pw(1.0 - p, m.one_minus_p) * pw(a, m.a) * pw(1.0 - a, m.one_minus_a);
}

/// a_n / (2 b_n), evaluated in log space after cancelling exponents exactly.
inline double phi_round_vacuum_ratio(double a, double p, double b, int n) {
  detail::require_open_unit(a, "a");
  detail::require_damping(p);
  detail::require_open_unit(b, "b");
  const RoundWeights w = phi_round_weights(n);
  const RoundMonomial& x = w.vacuum;
  const RoundMonomial& y = w.coherent;
  if (x.p > y.p && p == 0.0) return 0.0;
  double log_ratio = std::log(x.coefficient) - std::log(2.0 * y.coefficient);
  auto term = [&log_ratio](double base, std::int64_t e) {
    if (e != 0) log_ratio += static_cast<double>(e) * std::log(base);
  };
  term(p, x.p - y.p);
  term(b, x.b - y.b);
  term(1.0 - b, x.one_minus_b - y.one_minus_b);
  term(1.0 - p, x.one_minus_p - y.one_minus_p);
  term(a, x.a - y.a);
  term(1.0 - a, x.one_minus_a - y.one_minus_a);
  return std::exp(log_ratio);
}

/// C(rho^(n)) = 2b_n / (a_n + 2b_n).
inline double concurrence_phi_roundn(double a, double p, double b, int n) {
  return 1.0 / (1.0 + phi_round_vacuum_ratio(a, p, b, n));
}

}  // namespace swapurify

#endif  // SWAPURIFY_ENTANGLEMENT_HPP
