// Copyright 2026 The latticesim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <map>
#include <string>

#include <Eigen/Dense>

#include "latticesim/error.hpp"

namespace latticesim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Tensor product of single-qubit Pauli operators on n qubits.
///
/// ops[q] is the operator ('I', 'X', 'Y' or 'Z') acting on qubit q, with
/// qubit 0 the least significant bit of a computational basis index.
/// Comparison is lexicographic in ops and total.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::string ops);
  static PauliString identity(int n);
  /// Single Z on qubit q of an n-qubit register.
  static PauliString single_z(int n, int q);

  int n() const { return static_cast<int>(ops_.size()); }
  char op(int q) const { return ops_[static_cast<std::size_t>(q)]; }
  const std::string& ops() const { return ops_; }
  bool is_identity() const;
  bool is_diagonal() const;  // only I and Z factors
  int weight() const;        // number of non-identity factors

  /// Qubit-0-rightmost rendering used for display and JSON.
  std::string reversed() const;

  auto operator<=>(const PauliString& other) const = default;

 private:
  std::string ops_;
};

/// A single weighted Pauli string.
struct PauliTerm {
  PauliString string;
  Complex coeff;
};

/// Weighted sum of n-qubit Pauli strings with no zero coefficients stored.
///
/// The map ordering (lexicographic in the string) makes iteration, matrix
/// assembly and serialization deterministic.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(int n) : n_(n) {}

  int n() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::map<PauliString, Complex>& terms() const { return terms_; }

  /// Adds c * P, combining with an existing term and dropping exact zeros.
  void add(const PauliString& p, Complex c);
  void add(const PauliSum& other);
  Complex coeff(const PauliString& p) const;

  PauliSum& operator*=(Complex c);
  friend PauliSum operator*(Complex c, PauliSum s) { return s *= c; }
  friend PauliSum operator+(PauliSum a, const PauliSum& b) {
    a.add(b);
    return a;
  }

  /// Removes terms with |coeff| below eps. Returns the pruned sum.
  PauliSum pruned(double eps = 1e-13) const;

  /// True when every coefficient is real to within tol, which for sums of
  /// (Hermitian) Pauli strings is equivalent to Hermiticity of the operator.
  bool is_hermitian(double tol = 1e-12) const;
  bool is_diagonal() const;

  /// Coefficient of the identity string (0 if absent).
  Complex identity_coeff() const;
  /// Copy with the identity term removed; the dropped coefficient is
  /// returned through shift.
  PauliSum without_identity(Complex* shift = nullptr) const;

  double max_abs_coeff() const;         // c_P candidate
  double one_norm_of_coeffs() const;    // sum of |coeff|

 private:
  int n_ = 0;
  std::map<PauliString, Complex> terms_;
};

/// Dense matrix of a single Pauli string (2^n x 2^n, qubit 0 = LSB).
Matrix pauli_string_matrix(const PauliString& p);

/// Dense realization of a PauliSum. Fails with TOO_LARGE beyond 12 qubits.
Matrix to_matrix(const PauliSum& s);

/// Exact Pauli-basis decomposition of a Hermitian matrix, with coefficients
/// recovered as Tr(M P) / 2^n. Coefficients below prune_eps are dropped.
///
/// Fails with BAD_DIM for non-power-of-two input and NON_HERMITIAN when the
/// anti-Hermitian part exceeds herm_tol.
PauliSum decompose_hermitian(const Matrix& m, double prune_eps = 1e-13,
                             double herm_tol = 1e-10);

/// Z-decomposition of the evenly spaced diagonal operator
/// diag(v_min, v_min + step, ..., v_min + (2^n_q - 1) step), basis index b
/// mapping to the b-th value (qubit 0 = LSB). The result is an identity term
/// plus at most n_q single-Z terms.
PauliSum decompose_evenly_spaced_diagonal(int n_q, double v_min, double step);

/// Product of two diagonal (I/Z only) sums; used to build powers of
/// evenly spaced diagonal operators symbolically.
PauliSum multiply_diagonal(const PauliSum& a, const PauliSum& b);

}  // namespace latticesim
