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

#ifndef SWAPURIFY_STATES_HPP
#define SWAPURIFY_STATES_HPP

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swapurify/qmat.hpp"

namespace swapurify {

/// Normalized state vector over n qubits.
class PureState {
 public:
  PureState(int n_qubits, std::vector<Complex> amplitudes, const Numerics& numerics = {})
      : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits <= 0 || amplitudes_.size() != (std::size_t{1} << n_qubits)) {
      throw std::invalid_argument("pure state needs 2^n amplitudes for n >= 1");
    }
    double norm2 = 0.0;
    for (const auto& z : amplitudes_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw std::invalid_argument("pure state amplitudes must be finite");
      }
      norm2 += std::norm(z);
    }
    if (std::abs(std::sqrt(norm2) - 1.0) > numerics.atol) {
      throw std::invalid_argument("pure state is not normalized (norm^2 = " +
                                  std::to_string(norm2) + ")");
    }
  }

  int n_qubits() const { return n_qubits_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }

  /// <this|other>
  Complex inner(const PureState& other) const {
    if (other.amplitudes_.size() != amplitudes_.size()) {
      throw std::invalid_argument("inner product of states on different registers");
    }
    Complex s{};
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
      s += std::conj(amplitudes_[i]) * other.amplitudes_[i];
    }
    return s;
  }

 private:
  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite matrix over n qubits (all
/// within Numerics::atol). Construction validates eagerly.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix matrix, const Numerics& numerics = {})
      : n_qubits_(qubit_count(matrix)), matrix_(std::move(matrix)) {
    if (!is_hermitian(matrix_, numerics.atol)) {
      throw std::invalid_argument("density matrix is not Hermitian");
    }
    const double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > numerics.atol || std::abs(matrix_.trace().imag()) > numerics.atol) {
      throw std::invalid_argument("density matrix trace " + std::to_string(tr) + " is not 1");
    }
    const auto spectrum = eigenvalues(matrix_, numerics);
    if (spectrum.eigenvalues.back().real() < -numerics.atol) {
      throw std::invalid_argument("density matrix has negative eigenvalue " +
                                  std::to_string(spectrum.eigenvalues.back().real()));
    }
  }

  static DensityMatrix from_pure(const PureState& s) {
    const auto amps = s.amplitudes();
    return DensityMatrix(ComplexMatrix::outer(amps, amps), Unchecked{});
  }

  /// Maximally mixed state I / 2^n.
  static DensityMatrix maximally_mixed(int n_qubits) {
    const std::size_t d = std::size_t{1} << n_qubits;
    return DensityMatrix(ComplexMatrix::identity(d) / Complex(static_cast<double>(d)), Unchecked{});
  }

  /// rho (x) sigma, register order: rho's qubits then sigma's.
  friend DensityMatrix kron(const DensityMatrix& rho, const DensityMatrix& sigma) {
    return DensityMatrix(kron(rho.matrix_, sigma.matrix_), Unchecked{});
  }

  int n_qubits() const { return n_qubits_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  Complex operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

  /// trace(rho^2)
  double purity() const { return (matrix_ * matrix_).trace().real(); }

 private:
  struct Unchecked {};
  DensityMatrix(ComplexMatrix matrix, Unchecked)
      : n_qubits_(qubit_count(matrix)), matrix_(std::move(matrix)) {}

  int n_qubits_;
  ComplexMatrix matrix_;
};

inline DensityMatrix to_density(const PureState& s) { return DensityMatrix::from_pure(s); }

namespace detail {

inline void require_weight(double w, const char* name) {
  if (!(w >= 0.0 && w <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " +
                                std::to_string(w));
  }
}

inline PureState two_qubit(double w00, double w01, double w10, double w11) {
  return PureState(2, {std::sqrt(w00), std::sqrt(w01), std::sqrt(w10), std::sqrt(w11)});
}

}  // namespace detail

/// sqrt(a)|01> + sqrt(1-a)|10>
inline PureState phi_pair(double a) {
  detail::require_weight(a, "a");
  return detail::two_qubit(0.0, a, 1.0 - a, 0.0);
}

/// sqrt(a)|10> + sqrt(1-a)|01>, the flipped partner of phi_pair(a).
inline PureState phi_pair_flipped(double a) {
  detail::require_weight(a, "a");
  return detail::two_qubit(0.0, 1.0 - a, a, 0.0);
}

/// sqrt(A)|00> + sqrt(1-A)|11>
inline PureState chi_pair(double big_a) {
  detail::require_weight(big_a, "A");
  return detail::two_qubit(big_a, 0.0, 0.0, 1.0 - big_a);
}

enum class BellLabel { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellLabel, 4> kBellLabels = {
    BellLabel::PhiPlus, BellLabel::PhiMinus, BellLabel::PsiPlus, BellLabel::PsiMinus};

inline std::string_view to_string(BellLabel label) {
  switch (label) {
    case BellLabel::PhiPlus: return "Phi+";
    case BellLabel::PhiMinus: return "Phi-";
    case BellLabel::PsiPlus: return "Psi+";
    case BellLabel::PsiMinus: return "Psi-";
  }
  return "?";
}

/// Phi+- = (|00> +- |11>)/sqrt2, Psi+- = (|01> +- |10>)/sqrt2.
inline PureState bell(BellLabel label) {
  const double h = 1.0 / std::sqrt(2.0);
  switch (label) {
    case BellLabel::PhiPlus: return PureState(2, {h, 0.0, 0.0, h});
    case BellLabel::PhiMinus: return PureState(2, {h, 0.0, 0.0, -h});
    case BellLabel::PsiPlus: return PureState(2, {0.0, h, h, 0.0});
    case BellLabel::PsiMinus: return PureState(2, {0.0, h, -h, 0.0});
  }
  throw std::invalid_argument("unknown Bell label");
}

/// Computational basis projector |k><k| over n qubits.
inline DensityMatrix basis_state(int n_qubits, std::size_t index) {
  std::vector<Complex> amps(std::size_t{1} << n_qubits, Complex{});
  amps.at(index) = 1.0;
  return to_density(PureState(n_qubits, std::move(amps)));
}

}  // namespace swapurify

#endif  // SWAPURIFY_STATES_HPP
