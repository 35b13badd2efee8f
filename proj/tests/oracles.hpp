// Copyright 2026 The mirrorstate Authors
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

#pragma once

// Independent reference implementations for the tests. Nothing here calls
// into the library: states are written out ket by ket, gates are embedded as
// full matrices, and spectra come from a plain Jacobi sweep.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline int bit_of(std::uint64_t index, int qubit, int n) { return static_cast<int>((index >> (n - qubit)) & 1U); }

/// Sum of amp * |bits> over the listed terms; not normalized.
inline Vec kets(const std::vector<std::pair<std::string, Complex>>& terms) {
  const auto n = terms.front().first.size();
  Vec v = Vec::Zero(static_cast<Eigen::Index>(std::uint64_t{1} << n));
  for (const auto& [bits, amp] : terms) v[static_cast<Eigen::Index>(std::stoull(bits, nullptr, 2))] += amp;
  return v;
}

/// Full 2^n x 2^n matrix of a k-qubit gate acting on `targets` (1-based).
inline Mat embed(const Mat& u, const std::vector<int>& targets, int n) {
  const std::uint64_t d = std::uint64_t{1} << n;
  const int k = static_cast<int>(targets.size());
  Mat full = Mat::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::uint64_t out = 0; out < d; ++out) {
    for (std::uint64_t in = 0; in < d; ++in) {
      bool spectators_agree = true;
      for (int q = 1; q <= n; ++q) {
        if (std::find(targets.begin(), targets.end(), q) == targets.end() && bit_of(out, q, n) != bit_of(in, q, n)) {
          spectators_agree = false;
        }
      }
      if (!spectators_agree) continue;
      int r = 0, c = 0;
      for (int j = 0; j < k; ++j) {
        r = 2 * r + bit_of(out, targets[static_cast<std::size_t>(j)], n);
        c = 2 * c + bit_of(in, targets[static_cast<std::size_t>(j)], n);
      }
      full(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(in)) = u(r, c);
    }
  }
  return full;
}

inline Mat pauli(char p) {
  Mat m(2, 2);
  const Complex i(0, 1);
  switch (p) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1; break;
  }
  return m;
}

inline Mat hadamard() {
  Mat m(2, 2);
  const double s = 1 / std::sqrt(2.0);
  m << s, s, s, -s;
  return m;
}

inline Mat swap_gate() {
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
  return m;
}

inline Mat cnot_gate() {
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

/// Reduced state on `keep` (in that order) by explicit index bookkeeping.
inline Mat partial_trace(const Mat& rho, const std::vector<int>& keep, int n) {
  const std::uint64_t d = std::uint64_t{1} << n;
  const int k = static_cast<int>(keep.size());
  Mat out = Mat::Zero(Eigen::Index{1} << k, Eigen::Index{1} << k);
  auto sub = [&](std::uint64_t idx) {
    int s = 0;
    for (int q : keep) s = 2 * s + bit_of(idx, q, n);
    return s;
  };
  auto rest_equal = [&](std::uint64_t a, std::uint64_t b) {
    for (int q = 1; q <= n; ++q) {
      if (std::find(keep.begin(), keep.end(), q) == keep.end() && bit_of(a, q, n) != bit_of(b, q, n)) return false;
    }
    return true;
  };
  for (std::uint64_t a = 0; a < d; ++a) {
    for (std::uint64_t b = 0; b < d; ++b) {
      if (rest_equal(a, b)) out(sub(a), sub(b)) += rho(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
    }
  }
  return out;
}

/// Partial transpose over `subset`: swap the row and column bits of those qubits.
inline Mat partial_transpose(const Mat& rho, const std::vector<int>& subset, int n) {
  const std::uint64_t d = std::uint64_t{1} << n;
  Mat out(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::uint64_t r = 0; r < d; ++r) {
    for (std::uint64_t c = 0; c < d; ++c) {
      std::uint64_t r2 = r, c2 = c;
      for (int q : subset) {
        const std::uint64_t bit = std::uint64_t{1} << (n - q);
        if ((r & bit) != (c & bit)) {
          r2 ^= bit;
          c2 ^= bit;
        }
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rho(static_cast<Eigen::Index>(r2), static_cast<Eigen::Index>(c2));
    }
  }
  return out;
}

/// Eigenvalues of a Hermitian matrix, ascending. The matrix is mapped to the
/// real symmetric [[A, -B], [B, A]] (each eigenvalue appears twice) and
/// diagonalized by cyclic Jacobi rotations.
inline std::vector<double> eigenvalues(const Mat& h) {
  const auto n = h.rows();
  Eigen::MatrixXd a(2 * n, 2 * n);
  a << h.real(), -h.imag(), h.imag(), h.real();
  const auto m = a.rows();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (Eigen::Index p = 0; p < m; ++p)
      for (Eigen::Index q = p + 1; q < m; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-30) break;
    for (Eigen::Index p = 0; p < m; ++p) {
      for (Eigen::Index q = p + 1; q < m; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (Eigen::Index k = 0; k < m; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < m; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> all;
  for (Eigen::Index i = 0; i < m; ++i) all.push_back(a(i, i));
  std::sort(all.begin(), all.end());
  std::vector<double> out;
  for (std::size_t i = 0; i < all.size(); i += 2) out.push_back(0.5 * (all[i] + all[i + 1]));
  return out;
}

inline double entropy_bits(const Mat& rho) {
  double s = 0;
  for (double l : eigenvalues(rho)) {
    if (l > 1e-14) s -= l * std::log2(l);
  }
  return s;
}

inline double negativity(const Mat& rho, const std::vector<int>& subset, int n) {
  double s = 0;
  for (double l : eigenvalues(partial_transpose(rho, subset, n))) {
    if (l < -1e-9) s -= l;
  }
  return s;
}

/// Seeded generator for property tests (SplitMix64).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
  double gaussian() {
    const double u1 = 1.0 - uniform();
    return std::sqrt(-2 * std::log(u1)) * std::cos(2 * M_PI * uniform());
  }
  /// Normalized random amplitudes for n qubits.
  Vec state(int n) {
    Vec v(Eigen::Index{1} << n);
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = Complex(gaussian(), gaussian());
    return v / v.norm();
  }

 private:
  std::uint64_t state_;
};

// Golden vectors, written out ket by ket.

/// 1/2 (|0000> + |0110> + |1001> - |1111>).
inline Vec mirror4() { return kets({{"0000", 0.5}, {"0110", 0.5}, {"1001", 0.5}, {"1111", -0.5}}); }

/// 1/2 (|0000> + |0110> + |1001> + |1111>).
inline Vec rearranged_bell4() { return kets({{"0000", 0.5}, {"0110", 0.5}, {"1001", 0.5}, {"1111", 0.5}}); }

/// (1/2 sqrt 2)(|00>|psi+>|00> + |01>|psi+>|10> + |11>|psi->|11> + |10>|psi+>|01>), expanded
/// with psi+- = (|00> +- |11>)/sqrt 2 and renormalized.
inline Vec mirror6_grouped() {
  const double a = 1 / (2 * std::sqrt(2.0));
  return kets({{"000000", a}, {"001100", a}, {"010010", a}, {"011110", a},
               {"110011", a}, {"111111", -a}, {"100001", a}, {"101101", a}});
}

/// Mirror state for any N from the definition: |R(i)>|i> with the all-ones sign flip.
inline Vec mirror(int n) {
  const std::uint64_t half = std::uint64_t{1} << n;
  Vec v = Vec::Zero(static_cast<Eigen::Index>(half * half));
  for (std::uint64_t i = 0; i < half; ++i) {
    std::uint64_t r = 0;
    for (int b = 0; b < n; ++b) r = (r << 1) | ((i >> b) & 1U);
    v[static_cast<Eigen::Index>((r << n) | i)] = (i == half - 1 ? -1.0 : 1.0) / std::sqrt(static_cast<double>(half));
  }
  return v;
}

inline Vec psi_plus() { return kets({{"00", 1 / std::sqrt(2.0)}, {"11", 1 / std::sqrt(2.0)}}); }

}  // namespace oracle
