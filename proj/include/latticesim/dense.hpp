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

#include <vector>

#include <Eigen/Dense>

#include "latticesim/pauli.hpp"

namespace latticesim {

using Vector = Eigen::VectorXcd;

/// Normalized state over n qubits (qubit 0 = least significant bit).
struct StateVector {
  Vector amps;
  int n() const;
  double norm() const { return amps.norm(); }
};

/// Number of qubits for a 2^n x 2^n operator; BAD_DIM if not a power of two.
int qubit_count(const Matrix& m);

/// e^{-i H t} for Hermitian H, via full eigendecomposition.
Matrix matrix_exp_hermitian(const Matrix& h, double t, double herm_tol = 1e-10);

/// Largest singular value. Dense SVD up to 10 qubits, power iteration on
/// M^dagger M above (deterministic start vector).
double spectral_norm(const Matrix& m);

/// Kronecker embedding of a k-qubit operator onto the qubits listed in
/// `qubits` (ascending significance within `local`: local qubit j maps to
/// global qubits[j]), identity elsewhere.
Matrix embed(const Matrix& local, const std::vector<int>& qubits, int total_n);

/// Centered symmetric Fourier transform,
/// FT_{jk} = N^{-1/2} exp(2 pi i (j-s)(k-s)/N) with s = (N-1)/2.
Matrix symmetric_ft(int n_values);

/// Deviation from unitarity, || U^dagger U - 1 ||.
double unitarity_error(const Matrix& u);

/// Frobenius norm of (a - b); cheap upper-bound companion to spectral_norm.
double frobenius_distance(const Matrix& a, const Matrix& b);

}  // namespace latticesim
