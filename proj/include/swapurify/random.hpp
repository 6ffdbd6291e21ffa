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

#ifndef SWAPURIFY_RANDOM_HPP
#define SWAPURIFY_RANDOM_HPP

// Random states and unitaries for property checks.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "swapurify/qmat.hpp"
#include "swapurify/states.hpp"

namespace swapurify {

template <class Rng>
ComplexMatrix random_ginibre(Rng& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> normal;
  ComplexMatrix g(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  }
  return g;
}

/// G G^dagger / trace with G a d x rank Ginibre matrix.
template <class Rng>
DensityMatrix random_density_matrix(Rng& rng, int n_qubits, std::size_t rank = 0) {
  const std::size_t d = std::size_t{1} << n_qubits;
  const ComplexMatrix g = random_ginibre(rng, d, rank == 0 ? d : rank);
  ComplexMatrix rho = g * dagger(g);
  rho /= rho.trace();
  // Symmetrize away rounding so the Hermitian check sees an exact mirror.
  return DensityMatrix((rho + dagger(rho)) * Complex(0.5));
}

template <class Rng>
PureState random_pure_state(Rng& rng, int n_qubits) {
  std::normal_distribution<double> normal;
  std::vector<Complex> amps(std::size_t{1} << n_qubits);
  double norm2 = 0.0;
  for (auto& z : amps) {
    z = Complex(normal(rng), normal(rng));
    norm2 += std::norm(z);
  }
  for (auto& z : amps) z /= std::sqrt(norm2);
  return PureState(n_qubits, std::move(amps));
}

/// Haar-distributed-enough single-qubit unitary from Euler angles.
template <class Rng>
ComplexMatrix random_unitary_2x2(Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double theta = std::asin(std::sqrt(unit(rng)));
  const Complex e1 = std::polar(1.0, angle(rng));
  const Complex e2 = std::polar(1.0, angle(rng));
  const Complex g = std::polar(1.0, angle(rng));
  return ComplexMatrix{{g * e1 * std::cos(theta), g * e2 * std::sin(theta)},
                       {-g * std::conj(e2) * std::sin(theta), g * std::conj(e1) * std::cos(theta)}};
}

}  // namespace swapurify

#endif  // SWAPURIFY_RANDOM_HPP
