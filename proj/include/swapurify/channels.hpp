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

#ifndef SWAPURIFY_CHANNELS_HPP
#define SWAPURIFY_CHANNELS_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "swapurify/qmat.hpp"
#include "swapurify/states.hpp"

namespace swapurify {

/// Single-qubit channel rho -> sum_mu K_mu rho K_mu^dagger. Construction
/// checks completeness, sum_mu K_mu^dagger K_mu = I.
class KrausChannel {
 public:
  KrausChannel(std::string label, std::vector<ComplexMatrix> operators,
               const Numerics& numerics = {})
      : label_(std::move(label)), operators_(std::move(operators)) {
    if (operators_.empty()) throw std::invalid_argument("channel needs at least one operator");
    for (const auto& k : operators_) {
      if (k.rows() != 2 || k.cols() != 2) {
        throw std::invalid_argument("single-qubit Kraus operators must be 2x2, got " + k.shape());
      }
    }
    if (completeness_error() > numerics.atol) {
      throw std::invalid_argument("Kraus operators of '" + label_ +
                                  "' violate completeness by " +
                                  std::to_string(completeness_error()));
    }
  }

  const std::string& label() const { return label_; }
  const std::vector<ComplexMatrix>& operators() const { return operators_; }

  /// || sum K^dagger K - I ||_max
  double completeness_error() const {
    ComplexMatrix sum = ComplexMatrix::zeros(2, 2);
    for (const auto& k : operators_) sum += dagger(k) * k;
    return max_abs_diff(sum, ComplexMatrix::identity(2));
  }

 private:
  std::string label_;
  std::vector<ComplexMatrix> operators_;
};

/// K1 = |0><0| + sqrt(1-p)|1><1|, K2 = sqrt(p)|0><1|.
inline KrausChannel amplitude_damping(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("damping probability must lie in [0, 1], got " +
                                std::to_string(p));
  }
  return KrausChannel("amplitude_damping(" + std::to_string(p) + ")",
                      {ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - p)}},
                       ComplexMatrix{{0.0, std::sqrt(p)}, {0.0, 0.0}}});
}

inline KrausChannel identity_channel() {
  return KrausChannel("identity", {ComplexMatrix::identity(2)});
}

/// I (x) ... (x) op (x) ... (x) I with op on `target`.
inline ComplexMatrix embed_single_qubit(const ComplexMatrix& op, int target, int n_qubits) {
  if (target < 0 || target >= n_qubits) {
    throw std::invalid_argument("qubit index " + std::to_string(target) + " out of range for " +
                                std::to_string(n_qubits) + " qubits");
  }
  ComplexMatrix out = target == 0 ? op : ComplexMatrix::identity(2);
  for (int q = 1; q < n_qubits; ++q) {
    out = kron(out, q == target ? op : ComplexMatrix::identity(2));
  }
  return out;
}

/// Applies the channel to one qubit of a register.
inline DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho, int target,
                           const Numerics& numerics = {}) {
  const int n = rho.n_qubits();
  ComplexMatrix out = ComplexMatrix::zeros(rho.matrix().rows(), rho.matrix().cols());
  for (const auto& k : channel.operators()) {
    const ComplexMatrix full = embed_single_qubit(k, target, n);
    out += full * rho.matrix() * dagger(full);
  }
  return DensityMatrix(std::move(out), numerics);
}

/// Independent local channels on qubit 0 and qubit 1 of a two-qubit state.
inline DensityMatrix apply_local_pair(const KrausChannel& first, const KrausChannel& second,
                                      const DensityMatrix& rho, const Numerics& numerics = {}) {
  if (rho.n_qubits() != 2) throw std::invalid_argument("apply_local_pair needs a 2-qubit state");
  return apply(second, apply(first, rho, 0, numerics), 1, numerics);
}

inline DensityMatrix apply_local_pair(const KrausChannel& channel, const DensityMatrix& rho,
                                      const Numerics& numerics = {}) {
  return apply_local_pair(channel, channel, rho, numerics);
}

}  // namespace swapurify

#endif  // SWAPURIFY_CHANNELS_HPP
