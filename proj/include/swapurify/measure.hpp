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

#ifndef SWAPURIFY_MEASURE_HPP
#define SWAPURIFY_MEASURE_HPP

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swapurify/channels.hpp"
#include "swapurify/qmat.hpp"
#include "swapurify/states.hpp"

namespace swapurify {

/// One branch of an exhaustive measurement. `post_state` is empty when the
/// branch probability is at or below Numerics::atol.
struct MeasurementOutcome {
  std::string label;
  double probability = 0.0;
  std::optional<DensityMatrix> post_state;

  bool valid() const { return post_state.has_value(); }
};

enum class WeakSign { Plus, Minus };

inline std::string_view to_string(WeakSign s) { return s == WeakSign::Plus ? "M+" : "M-"; }

/// Two-outcome weak measurement
///   M+ = sqrt(b)|0><0| + sqrt(1-b)|1><1|,  M- = sqrt(1-b)|0><0| + sqrt(b)|1><1|.
/// b = 0 or 1 would make it projective and is rejected.
class WeakMeasurement {
 public:
  explicit WeakMeasurement(double b) : b_(b) {
    if (!(b > 0.0 && b < 1.0)) {
      throw std::invalid_argument("weak measurement strength b must lie in (0, 1), got " +
                                  std::to_string(b));
    }
  }

  double strength() const { return b_; }

  ComplexMatrix op(WeakSign s) const {
    const double lo = std::sqrt(b_);
    const double hi = std::sqrt(1.0 - b_);
    return s == WeakSign::Plus ? ComplexMatrix::diagonal({lo, hi})
                               : ComplexMatrix::diagonal({hi, lo});
  }

 private:
  double b_;
};

namespace detail {

inline MeasurementOutcome make_outcome(std::string label, ComplexMatrix unnormalized,
                                       const Numerics& numerics) {
  MeasurementOutcome out;
  out.label = std::move(label);
  out.probability = std::max(0.0, unnormalized.trace().real());
  if (out.probability > numerics.atol) {
    out.post_state.emplace(unnormalized / Complex(out.probability), numerics);
  }
  return out;
}

}  // namespace detail

/// Bell measurement on qubits (first, second). The pair index of a Bell
/// vector is 2*bit(first) + bit(second). Each post-state lives on the
/// remaining qubits in their original relative order, with the measured
/// pair traced out. Outcomes follow kBellLabels order.
inline std::array<MeasurementOutcome, 4> bell_measure(const DensityMatrix& rho,
                                                      std::pair<int, int> qubits,
                                                      const Numerics& numerics = {}) {
  const int n = rho.n_qubits();
  const auto [qa, qb] = qubits;
  if (n < 2) throw std::invalid_argument("Bell measurement needs at least two qubits");
  if (qa == qb || qa < 0 || qb < 0 || qa >= n || qb >= n) {
    throw std::invalid_argument("Bell measurement qubits must be distinct and in range");
  }
  std::vector<int> rest;
  for (int q = 0; q < n; ++q) {
    if (q != qa && q != qb) rest.push_back(q);
  }
  const std::size_t drest = std::size_t{1} << rest.size();
  auto index = [&](std::size_t r, std::size_t s) {
    std::size_t full = 0;
    for (std::size_t t = 0; t < rest.size(); ++t) {
      full |= ((r >> (rest.size() - 1 - t)) & 1U) << (n - 1 - rest[t]);
    }
    full |= ((s >> 1) & 1U) << (n - 1 - qa);
    full |= (s & 1U) << (n - 1 - qb);
    return full;
  };

  std::array<MeasurementOutcome, 4> out;
  for (std::size_t k = 0; k < kBellLabels.size(); ++k) {
    const PureState b = bell(kBellLabels[k]);
    const auto amp = b.amplitudes();
    ComplexMatrix reduced(drest, drest);
    for (std::size_t r = 0; r < drest; ++r) {
      for (std::size_t c = 0; c < drest; ++c) {
        Complex sum{};
        for (std::size_t s = 0; s < 4; ++s) {
          if (amp[s] == Complex{}) continue;
          for (std::size_t t = 0; t < 4; ++t) {
            if (amp[t] == Complex{}) continue;
            sum += std::conj(amp[s]) * rho(index(r, s), index(c, t)) * amp[t];
          }
        }
        reduced(r, c) = sum;
      }
    }
    out[k] = detail::make_outcome(std::string(to_string(kBellLabels[k])), std::move(reduced),
                                  numerics);
  }
  return out;
}

/// Keeps one branch of a weak measurement on `target`.
inline MeasurementOutcome weak_branch(const DensityMatrix& rho, int target,
                                      const WeakMeasurement& m, WeakSign sign,
                                      const Numerics& numerics = {}) {
  const ComplexMatrix full = embed_single_qubit(m.op(sign), target, rho.n_qubits());
  return detail::make_outcome(std::string(to_string(sign)), full * rho.matrix() * dagger(full),
                              numerics);
}

/// Both branches of the weak measurement {M+, M-} on `target`.
inline std::array<MeasurementOutcome, 2> weak_measure(const DensityMatrix& rho, int target,
                                                      double b, const Numerics& numerics = {}) {
  const WeakMeasurement m(b);
  return {weak_branch(rho, target, m, WeakSign::Plus, numerics),
          weak_branch(rho, target, m, WeakSign::Minus, numerics)};
}

}  // namespace swapurify

#endif  // SWAPURIFY_MEASURE_HPP
