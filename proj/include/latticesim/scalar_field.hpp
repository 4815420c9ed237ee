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

#include <string>
#include <vector>

#include "latticesim/dense.hpp"
#include "latticesim/pauli.hpp"

namespace latticesim {

/// Per-site digitization of a bosonic field onto n_q qubits.
///
/// The field takes the 2^n_q evenly spaced values
/// {-phi_max, ..., +phi_max}; the conjugate momentum is defined through the
/// symmetric Fourier transform with its own evenly spaced grid.
struct Digitization {
  int n_q = 0;
  double phi_max = 0;
  double d_phi = 0;
  double pi_max = 0;
  double d_pi = 0;
};

/// Closed-form digitization parameters for n_q qubits per site.
Digitization digitize(int n_q);

enum class Basis { Field, Momentum };

/// One Hamiltonian summand acting on at most two sites, stored as Pauli
/// sums over the *local* site register(s). Momentum-basis pieces must be
/// conjugated by the per-site symmetric FT when realized densely.
struct LatticeTerm {
  enum class Kind { PiSquared, PhiSquared, PhiQuartic, Link };
  Kind kind;
  std::vector<int> sites;  // 1 site for on-site pieces, 2 (ascending) for links
  Basis basis;
  PauliSum local_sum;      // over sites.size() * n_q qubits, site order ascending
};

/// Exact size/norm metrics feeding the complexity formulas.
struct HamiltonianMetrics {
  long long n_h = 0;      // number of Hamiltonian summands H_J
  long long n_p = 0;      // max Pauli strings in any single H_J
  double c_p = 0;         // max |Pauli coefficient|
  double norm1 = 0;       // sum over J of ||H_J||
  double induced1 = 0;    // max over (slot, site) of the induced sum
  long long n_ind = 0;    // term count attaining the induced maximum
};

/// Digitized phi^4 Hamiltonian on an open hypercubic lattice, a = 1.
///
/// Each site carries three on-site pieces (pi^2 in the momentum basis,
/// phi^2 and phi^4 in the field basis) and each nearest-neighbor link the
/// full (phi_j - phi_i)^2 / 2 expansion. The mass term is m^2 phi^2 / 2.
class DigitizedLattice {
 public:
  DigitizedLattice(std::vector<int> dims, double mass, double lambda, int n_q,
                   bool periodic = false);

  int n_sites() const { return n_sites_; }
  int n_qubits() const { return n_sites_ * dig_.n_q; }
  int d() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  double mass() const { return mass_; }
  double lambda() const { return lambda_; }
  bool periodic() const { return periodic_; }
  const Digitization& dig() const { return dig_; }
  const std::vector<LatticeTerm>& terms() const { return terms_; }

  /// Qubit indices of a site, ascending significance.
  std::vector<int> site_qubits(int site) const;

  /// Summands grouped as the complexity formulas count them: one per site
  /// (pi^2 + phi^2 + phi^4 together) and one per link.
  struct Summand {
    std::vector<int> sites;                 // ascending
    std::vector<const LatticeTerm*> pieces;
  };
  std::vector<Summand> summands() const;

  /// Dense matrix of one stored term on the full register (momentum-basis
  /// pieces are FT-conjugated). Requires n_qubits() <= 12.
  Matrix term_matrix(const LatticeTerm& term) const;

  /// Dense matrix of the full Hamiltonian.
  Matrix dense_hamiltonian() const;

  /// Dense matrix of the Hamiltonian restricted to the terms fully
  /// supported inside `sites`, embedded on the full register.
  Matrix dense_hamiltonian_on(const std::vector<int>& sites) const;

 private:
  std::vector<int> dims_;
  int n_sites_ = 0;
  double mass_ = 0;
  double lambda_ = 0;
  bool periodic_ = false;
  Digitization dig_;
  std::vector<LatticeTerm> terms_;
};

/// Exact counts and norm bounds from the stored Pauli decompositions.
HamiltonianMetrics compute_metrics(const DigitizedLattice& lat);

/// Machine-readable description of lattice, terms and metrics (ham.json).
std::string lattice_to_json(const DigitizedLattice& lat);

}  // namespace latticesim
