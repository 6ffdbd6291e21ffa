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

#ifndef SWAPURIFY_QMAT_HPP
#define SWAPURIFY_QMAT_HPP

/// \file
/// Dense complex matrices for registers of up to four qubits.
///
/// Qubit ordering convention used throughout the library: qubit 0 is the
/// leftmost tensor factor and the most significant bit of a basis index,
/// i.e. |q0 q1 ... q(n-1)> has index q0*2^(n-1) + ... + q(n-1).

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace swapurify {

/// Tolerance policy. Passed explicitly to every operation that needs one.
struct Numerics {
  /// Hermiticity, trace and positivity checks.
  double atol = 1e-10;
  /// Per-eigenpair residual bound, relative to max(1, ||M||_F).
  double eig_residual = 1e-9;
  /// Strict comparisons between concurrences: x > y means x > y + compare.
  double compare = 1e-9;
  /// QR sweeps allowed per deflated eigenvalue before giving up.
  int max_qr_sweeps = 60;
};

/// Raised when an iterative kernel fails to meet its accuracy contract.
class NumericsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <std::floating_point Real>
class BasicMatrix {
 public:
  using value_type = std::complex<Real>;

  BasicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) {
      throw std::invalid_argument("matrix dimensions must be positive");
    }
    entries_.assign(rows * cols, value_type{});
  }

  BasicMatrix(std::size_t rows, std::size_t cols, std::vector<value_type> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
      throw std::invalid_argument("matrix dimensions must be positive");
    }
    if (entries_.size() != rows * cols) {
      throw std::invalid_argument("entry count " + std::to_string(entries_.size()) +
                                  " does not match " + std::to_string(rows) + "x" +
                                  std::to_string(cols));
    }
    for (const auto& z : entries_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw std::invalid_argument("matrix entries must be finite");
      }
    }
  }

  /// Row-major nested initializer: {{a, b}, {c, d}}.
  BasicMatrix(std::initializer_list<std::initializer_list<value_type>> rows)
      : BasicMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size(), flatten(rows)) {}

  static BasicMatrix identity(std::size_t n) {
    BasicMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Real{1};
    return m;
  }

  static BasicMatrix zeros(std::size_t rows, std::size_t cols) { return BasicMatrix(rows, cols); }

  static BasicMatrix diagonal(std::span<const value_type> diag) {
    BasicMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  static BasicMatrix diagonal(std::initializer_list<value_type> diag) {
    return diagonal(std::span<const value_type>(diag.begin(), diag.size()));
  }

  /// |v><w|
  static BasicMatrix outer(std::span<const value_type> v, std::span<const value_type> w) {
    BasicMatrix m(v.size(), w.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = v[i] * std::conj(w[j]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const value_type> entries() const { return entries_; }

  value_type trace() const {
    require_square("trace");
    value_type t{};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  BasicMatrix& operator+=(const BasicMatrix& o) {
    require_same_shape(o, "+");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }

  BasicMatrix& operator-=(const BasicMatrix& o) {
    require_same_shape(o, "-");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
  }

  BasicMatrix& operator*=(value_type s) {
    for (auto& z : entries_) z *= s;
    return *this;
  }

  BasicMatrix& operator/=(value_type s) {
    for (auto& z : entries_) z /= s;
    return *this;
  }

  friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b) { return a += b; }
  friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b) { return a -= b; }
  friend BasicMatrix operator*(BasicMatrix a, value_type s) { return a *= s; }
  friend BasicMatrix operator*(value_type s, BasicMatrix a) { return a *= s; }
  friend BasicMatrix operator/(BasicMatrix a, value_type s) { return a /= s; }

  friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("matrix product shape mismatch: " + a.shape() + " * " +
                                  b.shape());
    }
    BasicMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const value_type aik = a(i, k);
        if (aik == value_type{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  friend bool operator==(const BasicMatrix&, const BasicMatrix&) = default;

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  static std::vector<value_type> flatten(
      std::initializer_list<std::initializer_list<value_type>> rows) {
    std::vector<value_type> out;
    const std::size_t width = rows.size() == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != width) throw std::invalid_argument("ragged matrix initializer");
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }

  void require_square(const char* what) const {
    if (!is_square()) throw std::invalid_argument(std::string(what) + " needs a square matrix");
  }

  void require_same_shape(const BasicMatrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw std::invalid_argument(std::string("shape mismatch for ") + op + ": " + shape() +
                                  " vs " + o.shape());
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> entries_;
};

using Complex = std::complex<double>;
using ComplexMatrix = BasicMatrix<double>;

/// kron(A, B)[i*rb + k, j*cb + l] = A[i, j] * B[k, l]
template <std::floating_point Real>
BasicMatrix<Real> kron(const BasicMatrix<Real>& a, const BasicMatrix<Real>& b) {
  BasicMatrix<Real> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

template <std::floating_point Real>
BasicMatrix<Real> dagger(const BasicMatrix<Real>& m) {
  BasicMatrix<Real> out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  }
  return out;
}

/// Entrywise complex conjugate (no transpose).
template <std::floating_point Real>
BasicMatrix<Real> conjugate(const BasicMatrix<Real>& m) {
  BasicMatrix<Real> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = std::conj(m(i, j));
  }
  return out;
}

template <std::floating_point Real>
Real frobenius_norm(const BasicMatrix<Real>& m) {
  Real s{};
  for (const auto& z : m.entries()) s += std::norm(z);
  return std::sqrt(s);
}

/// max |a_ij - b_ij|; shapes must agree.
template <std::floating_point Real>
Real max_abs_diff(const BasicMatrix<Real>& a, const BasicMatrix<Real>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff shape mismatch: " + a.shape() + " vs " + b.shape());
  }
  Real d{};
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    d = std::max(d, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return d;
}

template <std::floating_point Real>
bool is_hermitian(const BasicMatrix<Real>& m, double atol) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > atol) return false;
    }
  }
  return true;
}

/// Number of qubits n for a 2^n x 2^n matrix; throws otherwise.
template <std::floating_point Real>
int qubit_count(const BasicMatrix<Real>& m) {
  if (!m.is_square()) throw std::invalid_argument("expected a square matrix, got " + m.shape());
  const std::size_t d = m.rows();
  if ((d & (d - 1)) != 0) {
    throw std::invalid_argument("dimension " + std::to_string(d) + " is not a power of two");
  }
  int n = 0;
  while ((std::size_t{1} << n) < d) ++n;
  return n;
}

/// Reduced matrix over the kept qubits, which appear in increasing original
/// index order. `keep` may be given in any order but must not repeat.
template <std::floating_point Real>
BasicMatrix<Real> partial_trace(const BasicMatrix<Real>& m, int n_qubits,
                                std::span<const int> keep) {
  if (n_qubits <= 0 || !m.is_square() || m.rows() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("partial_trace: matrix " + m.shape() + " is not over " +
                                std::to_string(n_qubits) + " qubits");
  }
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw std::invalid_argument("partial_trace: repeated qubit in keep set");
  }
  if (kept.front() < 0 || kept.back() >= n_qubits) {
    throw std::invalid_argument("partial_trace: qubit index out of range");
  }
  std::vector<int> traced;
  for (int q = 0; q < n_qubits; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }

  // Scatter the bits of a sub-index onto the given qubit positions.
  auto scatter = [n_qubits](std::size_t sub, const std::vector<int>& qubits) {
    std::size_t full = 0;
    const std::size_t k = qubits.size();
    for (std::size_t t = 0; t < k; ++t) {
      const std::size_t bit = (sub >> (k - 1 - t)) & 1U;
      full |= bit << (n_qubits - 1 - qubits[t]);
    }
    return full;
  };

  const std::size_t dk = std::size_t{1} << kept.size();
  const std::size_t dt = std::size_t{1} << traced.size();
  BasicMatrix<Real> out(dk, dk);
  for (std::size_t i = 0; i < dk; ++i) {
    const std::size_t ri = scatter(i, kept);
    for (std::size_t j = 0; j < dk; ++j) {
      const std::size_t rj = scatter(j, kept);
      std::complex<Real> s{};
      for (std::size_t t = 0; t < dt; ++t) {
        const std::size_t off = scatter(t, traced);
        s += m(ri | off, rj | off);
      }
      out(i, j) = s;
    }
  }
  return out;
}

template <std::floating_point Real>
BasicMatrix<Real> partial_trace(const BasicMatrix<Real>& m, int n_qubits,
                                std::initializer_list<int> keep) {
  return partial_trace(m, n_qubits, std::span<const int>(keep.begin(), keep.size()));
}

/// Eigenvalues sorted by descending real part (ties: descending imaginary
/// part), with the worst eigenpair residual seen while certifying them.
template <std::floating_point Real>
struct BasicSpectrum {
  std::vector<std::complex<Real>> eigenvalues;
  Real max_residual{};
};

using Spectrum = BasicSpectrum<double>;

namespace detail {

template <std::floating_point Real>
struct Rotation {
  std::complex<Real> c;  // real-valued in practice, kept complex for uniform algebra
  std::complex<Real> s;
};

// Unitary G = [[c, s], [-conj(s), c]] with G * (x, y)^T = (r, 0)^T.
template <std::floating_point Real>
Rotation<Real> make_rotation(std::complex<Real> x, std::complex<Real> y) {
  const Real ax = std::abs(x);
  const Real ay = std::abs(y);
  if (ay == Real{0}) return {Real{1}, Real{0}};
  if (ax == Real{0}) return {Real{0}, std::conj(y) / ay};
  const Real r = std::hypot(ax, ay);
  const std::complex<Real> phase = x / ax;
  return {ax / r, phase * std::conj(y) / r};
}

// Householder reduction to upper Hessenberg form: h <- Q^H h Q, z <- z Q.
template <std::floating_point Real>
void reduce_to_hessenberg(BasicMatrix<Real>& h, BasicMatrix<Real>& z) {
  using C = std::complex<Real>;
  const std::size_t n = h.rows();
  if (n < 3) return;
  std::vector<C> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    Real norm_x{};
    for (std::size_t i = k + 1; i < n; ++i) norm_x += std::norm(h(i, k));
    norm_x = std::sqrt(norm_x);
    if (norm_x == Real{0}) continue;
    const C x0 = h(k + 1, k);
    const C phase = std::abs(x0) == Real{0} ? C{1} : x0 / std::abs(x0);
    const C alpha = -phase * norm_x;
    std::fill(v.begin(), v.end(), C{});
    v[k + 1] = x0 - alpha;
    for (std::size_t i = k + 2; i < n; ++i) v[i] = h(i, k);
    Real vnorm{};
    for (std::size_t i = k + 1; i < n; ++i) vnorm += std::norm(v[i]);
    vnorm = std::sqrt(vnorm);
    if (vnorm == Real{0}) continue;
    for (std::size_t i = k + 1; i < n; ++i) v[i] /= vnorm;

    // Left: h <- (I - 2vv^H) h
    for (std::size_t j = 0; j < n; ++j) {
      C s{};
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * h(i, j);
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= Real{2} * v[i] * s;
    }
    // Right: h <- h (I - 2vv^H), z likewise.
    for (auto* m : {&h, &z}) {
      for (std::size_t i = 0; i < n; ++i) {
        C s{};
        for (std::size_t j = k + 1; j < n; ++j) s += (*m)(i, j) * v[j];
        for (std::size_t j = k + 1; j < n; ++j) (*m)(i, j) -= Real{2} * s * std::conj(v[j]);
      }
    }
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = C{};
  }
}

// Shifted QR iteration on a Hessenberg matrix, producing the complex Schur
// form t = Z^H M Z (upper triangular) and accumulating Z.
template <std::floating_point Real>
void hessenberg_qr(BasicMatrix<Real>& t, BasicMatrix<Real>& z, int max_sweeps) {
  using C = std::complex<Real>;
  const std::size_t n = t.rows();
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real norm = frobenius_norm(t);
  if (norm == Real{0}) return;
  std::vector<Rotation<Real>> rots(n);

  std::size_t hi = n - 1;
  int sweeps = 0;
  while (hi > 0) {
    // Find the start of the active unreduced block.
    std::size_t lo = hi;
    while (lo > 0) {
      const Real scale = std::abs(t(lo - 1, lo - 1)) + std::abs(t(lo, lo));
      if (std::abs(t(lo, lo - 1)) <= eps * (scale == Real{0} ? norm : scale)) {
        t(lo, lo - 1) = C{};
        break;
      }
      --lo;
    }
    if (lo == hi) {
      --hi;
      sweeps = 0;
      continue;
    }
    if (++sweeps > max_sweeps) {
      throw NumericsError("shifted QR iteration did not converge for eigenvalue " +
                          std::to_string(hi));
    }

    C shift;
    if (sweeps % 10 == 0) {
      // Exceptional shift to break cycles.
      shift = t(hi, hi) + Real{0.75} * std::abs(t(hi, hi - 1));
    } else {
      // Wilkinson shift: eigenvalue of the trailing 2x2 block closest to t(hi, hi).
      const C a = t(hi - 1, hi - 1);
      const C b = t(hi - 1, hi);
      const C c = t(hi, hi - 1);
      const C d = t(hi, hi);
      const C half = (a - d) / Real{2};
      C root = std::sqrt(half * half + b * c);
      if (std::real(std::conj(half) * root) < Real{0}) root = -root;
      const C denom = half + root;
      shift = std::abs(denom) == Real{0} ? d : d - b * c / denom;
    }

    for (std::size_t k = lo; k <= hi; ++k) t(k, k) -= shift;
    for (std::size_t k = lo; k < hi; ++k) {
      const Rotation<Real> g = make_rotation(t(k, k), t(k + 1, k));
      rots[k] = g;
      for (std::size_t j = k; j < n; ++j) {
        const C x = t(k, j);
        const C y = t(k + 1, j);
        t(k, j) = g.c * x + g.s * y;
        t(k + 1, j) = -std::conj(g.s) * x + g.c * y;
      }
      t(k + 1, k) = C{};
    }
    for (std::size_t k = lo; k < hi; ++k) {
      const Rotation<Real> g = rots[k];
      const std::size_t last = std::min(hi, k + 1);
      for (std::size_t i = 0; i <= last; ++i) {
        const C x = t(i, k);
        const C y = t(i, k + 1);
        t(i, k) = x * g.c + y * std::conj(g.s);
        t(i, k + 1) = -x * g.s + y * g.c;
      }
      for (std::size_t i = 0; i < n; ++i) {
        const C x = z(i, k);
        const C y = z(i, k + 1);
        z(i, k) = x * g.c + y * std::conj(g.s);
        z(i, k + 1) = -x * g.s + y * g.c;
      }
    }
    for (std::size_t k = lo; k <= hi; ++k) t(k, k) += shift;
  }
}

// Eigenvector of the upper triangular t for eigenvalue t(k, k), by back
// substitution with small-divisor protection.
template <std::floating_point Real>
std::vector<std::complex<Real>> triangular_eigenvector(const BasicMatrix<Real>& t, std::size_t k,
                                                       Real small_divisor) {
  using C = std::complex<Real>;
  const Real big = std::sqrt(std::numeric_limits<Real>::max()) / Real{16};
  std::vector<C> y(t.rows(), C{});
  y[k] = Real{1};
  const C lambda = t(k, k);
  for (std::size_t ii = k; ii-- > 0;) {
    C s{};
    for (std::size_t j = ii + 1; j <= k; ++j) s += t(ii, j) * y[j];
    C d = t(ii, ii) - lambda;
    if (std::abs(d) < small_divisor) d = small_divisor;
    y[ii] = -s / d;
    if (std::abs(y[ii]) > big) {
      const Real scale = std::abs(y[ii]);
      for (std::size_t j = ii; j <= k; ++j) y[j] /= scale;
    }
  }
  return y;
}

}  // namespace detail

/// All eigenvalues of a general complex square matrix (dimension <= 16).
///
/// Householder reduction to Hessenberg form followed by Wilkinson-shifted QR.
/// Every eigenvalue is certified by an eigenvector whose residual
/// ||Mv - lambda v|| stays below numerics.eig_residual * max(1, ||M||_F);
/// failure to converge or to certify throws NumericsError.
template <std::floating_point Real>
BasicSpectrum<Real> eigenvalues(const BasicMatrix<Real>& m, const Numerics& numerics = {}) {
  using C = std::complex<Real>;
  if (!m.is_square()) {
    throw std::invalid_argument("eigenvalues: non-square input " + m.shape());
  }
  const std::size_t n = m.rows();
  if (n > 16) throw std::invalid_argument("eigenvalues: dimension above 16 is not supported");

  BasicMatrix<Real> t = m;
  BasicMatrix<Real> z = BasicMatrix<Real>::identity(n);
  detail::reduce_to_hessenberg(t, z);
  detail::hessenberg_qr(t, z, numerics.max_qr_sweeps);

  const Real norm = frobenius_norm(m);
  const Real small_divisor =
      std::max(std::numeric_limits<Real>::epsilon() * frobenius_norm(t),
               std::numeric_limits<Real>::min());
  const Real bound = static_cast<Real>(numerics.eig_residual) * std::max(Real{1}, norm);

  BasicSpectrum<Real> out;
  out.eigenvalues.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const C lambda = t(k, k);
    const auto y = detail::triangular_eigenvector(t, k, small_divisor);
    std::vector<C> v(n, C{});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j <= k; ++j) v[i] += z(i, j) * y[j];
    }
    Real vnorm{};
    for (const auto& x : v) vnorm += std::norm(x);
    vnorm = std::sqrt(vnorm);
    Real residual{};
    for (std::size_t i = 0; i < n; ++i) {
      C r = -lambda * v[i];
      for (std::size_t j = 0; j < n; ++j) r += m(i, j) * v[j];
      residual += std::norm(r);
    }
    residual = std::sqrt(residual) / vnorm;
    if (!(residual <= bound)) {
      throw NumericsError("eigenpair " + std::to_string(k) + " residual " +
                          std::to_string(static_cast<double>(residual)) + " exceeds bound");
    }
    out.max_residual = std::max(out.max_residual, residual);
    out.eigenvalues.push_back(lambda);
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), [](const C& a, const C& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return out;
}

}  // namespace swapurify

#endif  // SWAPURIFY_QMAT_HPP
