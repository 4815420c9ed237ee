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

#include "latticesim/scalar_field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <json.hpp>

#include "latticesim/error.hpp"

namespace latticesim {

namespace {

// Extends an n_q-qubit diagonal sum to a two-site register, acting on the
// given half (0 = low qubits, 1 = high qubits).
PauliSum extend_to_pair(const PauliSum& local, int half, int n_q) {
  PauliSum out(2 * n_q);
  for (const auto& [p, c] : local.terms()) {
    std::string s(static_cast<std::size_t>(2 * n_q), 'I');
    for (int q = 0; q < n_q; ++q)
      s[static_cast<std::size_t>(half * n_q + q)] = p.op(q);
    out.add(PauliString(std::move(s)), c);
  }
  return out;
}

}  // namespace

Digitization digitize(int n_q) {
  if (n_q < 1 || n_q > 8)
    throw Error(ErrorCode::BAD_ARGS, "n_q must be between 1 and 8");
  Digitization d;
  d.n_q = n_q;
  const double N = std::pow(2.0, n_q);
  d.phi_max = N * std::sqrt(2.0 * std::numbers::pi / (2.0 * N + 1.0));
  d.d_phi = 2.0 * d.phi_max / (N - 1.0);
  // Momentum grid conjugate to the field grid through the symmetric FT,
  // whose centered indices are half-integers (anti-periodic in field
  // space): spacing 2 pi / (N d_phi), so pi_max -> pi/d_phi from below.
  d.d_pi = 2.0 * std::numbers::pi / (N * d.d_phi);
  d.pi_max = 0.5 * (N - 1.0) * d.d_pi;
  return d;
}

DigitizedLattice::DigitizedLattice(std::vector<int> dims, double mass,
                                   double lambda, int n_q, bool periodic)
    : dims_(std::move(dims)),
      mass_(mass),
      lambda_(lambda),
      periodic_(periodic),
      dig_(digitize(n_q)) {
  if (dims_.empty()) throw Error(ErrorCode::BAD_ARGS, "empty lattice dims");
  n_sites_ = 1;
  for (int e : dims_) {
    if (e < 1) throw Error(ErrorCode::BAD_ARGS, "lattice extent must be >= 1");
    n_sites_ *= e;
  }

  const PauliSum phi =
      decompose_evenly_spaced_diagonal(n_q, -dig_.phi_max, dig_.d_phi);
  const PauliSum phi2 = multiply_diagonal(phi, phi);
  const PauliSum phi4 = multiply_diagonal(phi2, phi2);
  const PauliSum pi_p =
      decompose_evenly_spaced_diagonal(n_q, -dig_.pi_max, dig_.d_pi);
  const PauliSum pi2 = multiply_diagonal(pi_p, pi_p);

  for (int s = 0; s < n_sites_; ++s) {
    terms_.push_back({LatticeTerm::Kind::PiSquared, {s}, Basis::Momentum,
                      (0.5 * pi2).pruned()});
    terms_.push_back({LatticeTerm::Kind::PhiSquared, {s}, Basis::Field,
                      (0.5 * mass_ * mass_ * phi2).pruned()});
    terms_.push_back({LatticeTerm::Kind::PhiQuartic, {s}, Basis::Field,
                      (lambda_ / 24.0 * phi4).pruned()});
  }

  // (phi_j - phi_i)^2 / 2 on each nearest-neighbor link, low site in the
  // low half of the two-site register.
  const PauliSum phi_low = extend_to_pair(phi, 0, n_q);
  const PauliSum phi_high = extend_to_pair(phi, 1, n_q);
  PauliSum link(2 * n_q);
  link.add(0.5 * extend_to_pair(phi2, 0, n_q));
  link.add(0.5 * extend_to_pair(phi2, 1, n_q));
  link.add(-1.0 * multiply_diagonal(phi_low, phi_high));
  link = link.pruned();

  std::vector<int> strides(dims_.size());
  int acc = 1;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    strides[k] = acc;
    acc *= dims_[k];
  }
  std::vector<int> coord(dims_.size(), 0);
  for (int s = 0; s < n_sites_; ++s) {
    for (std::size_t k = 0; k < dims_.size(); ++k) {
      if (dims_[k] == 1) continue;
      const bool interior = coord[k] + 1 < dims_[k];
      if (interior || (periodic_ && dims_[k] > 2)) {
        const int nk = interior ? coord[k] + 1 : 0;
        const int neighbor = s + (nk - coord[k]) * strides[k];
        const int lo = std::min(s, neighbor), hi = std::max(s, neighbor);
        terms_.push_back({LatticeTerm::Kind::Link, {lo, hi}, Basis::Field,
                          link});
      }
    }
    for (std::size_t k = 0; k < dims_.size(); ++k) {
      if (++coord[k] < dims_[k]) break;
      coord[k] = 0;
    }
  }
}

std::vector<int> DigitizedLattice::site_qubits(int site) const {
  std::vector<int> qs(static_cast<std::size_t>(dig_.n_q));
  for (int j = 0; j < dig_.n_q; ++j)
    qs[static_cast<std::size_t>(j)] = site * dig_.n_q + j;
  return qs;
}

std::vector<DigitizedLattice::Summand> DigitizedLattice::summands() const {
  std::vector<Summand> out;
  std::vector<Summand> site_groups(static_cast<std::size_t>(n_sites_));
  for (int s = 0; s < n_sites_; ++s)
    site_groups[static_cast<std::size_t>(s)].sites = {s};
  for (const auto& t : terms_) {
    if (t.kind == LatticeTerm::Kind::Link) continue;
    site_groups[static_cast<std::size_t>(t.sites[0])].pieces.push_back(&t);
  }
  for (auto& g : site_groups) out.push_back(std::move(g));
  for (const auto& t : terms_)
    if (t.kind == LatticeTerm::Kind::Link) out.push_back({t.sites, {&t}});
  return out;
}

Matrix DigitizedLattice::term_matrix(const LatticeTerm& term) const {
  const int n_q = dig_.n_q;
  Matrix local = to_matrix(term.local_sum);
  if (term.basis == Basis::Momentum) {
    // momentum pieces are single-site
    const Matrix f = symmetric_ft(1 << n_q);
    local = f * local * f.adjoint();
  }
  std::vector<int> qubits;
  for (int s : term.sites)
    for (int j = 0; j < n_q; ++j) qubits.push_back(s * n_q + j);
  return embed(local, qubits, n_qubits());
}

Matrix DigitizedLattice::dense_hamiltonian() const {
  const Eigen::Index dim = Eigen::Index(1) << n_qubits();
  Matrix h = Matrix::Zero(dim, dim);
  for (const auto& t : terms_) h += term_matrix(t);
  return h;
}

Matrix DigitizedLattice::dense_hamiltonian_on(
    const std::vector<int>& sites) const {
  const Eigen::Index dim = Eigen::Index(1) << n_qubits();
  Matrix h = Matrix::Zero(dim, dim);
  for (const auto& t : terms_) {
    bool inside = true;
    for (int s : t.sites)
      inside =
          inside && std::find(sites.begin(), sites.end(), s) != sites.end();
    if (inside) h += term_matrix(t);
  }
  return h;
}

namespace {

// Dense local matrix of a summand over its own sites (FT-conjugating
// momentum pieces), for exact per-term norms.
Matrix summand_local_matrix(const DigitizedLattice& lat,
                            const DigitizedLattice::Summand& g) {
  const int n_q = lat.dig().n_q;
  const int k = static_cast<int>(g.sites.size());
  const Eigen::Index dim = Eigen::Index(1) << (k * n_q);
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto* piece : g.pieces) {
    Matrix local = to_matrix(piece->local_sum);
    if (piece->basis == Basis::Momentum) {
      const Matrix f = symmetric_ft(1 << n_q);
      local = f * local * f.adjoint();
    }
    if (static_cast<int>(piece->sites.size()) == k) {
      m += local;
    } else {
      std::vector<int> qs;
      for (int j = 0; j < n_q; ++j) qs.push_back(j);
      m += embed(local, qs, k * n_q);
    }
  }
  return m;
}

}  // namespace

HamiltonianMetrics compute_metrics(const DigitizedLattice& lat) {
  HamiltonianMetrics mx;
  const auto groups = lat.summands();
  mx.n_h = static_cast<long long>(groups.size());

  std::vector<double> norms;
  norms.reserve(groups.size());
  for (const auto& g : groups) {
    // Pauli strings of the summand: momentum-basis pieces count in their own
    // basis; field-basis pieces are merged before counting.
    // c_P is read off the stored pieces before like-string merging; N_P
    // counts the merged union so shared strings are not double counted.
    long long n_p = 0;
    PauliSum field_merge(g.pieces.front()->local_sum.n());
    for (const auto* piece : g.pieces) {
      mx.c_p = std::max(mx.c_p, piece->local_sum.max_abs_coeff());
      if (piece->basis == Basis::Momentum)
        n_p += static_cast<long long>(piece->local_sum.size());
      else
        field_merge.add(piece->local_sum);
    }
    field_merge = field_merge.pruned();
    n_p += static_cast<long long>(field_merge.size());
    mx.n_p = std::max(mx.n_p, n_p);

    norms.push_back(spectral_norm(summand_local_matrix(lat, g)));
    mx.norm1 += norms.back();
  }

  // Induced 1-norm: maximize over the slot index within the ordered site
  // tuple and over the site occupying it.
  for (int slot = 0; slot < 2; ++slot) {
    for (int site = 0; site < lat.n_sites(); ++site) {
      double sum = 0;
      long long count = 0;
      for (std::size_t j = 0; j < groups.size(); ++j) {
        const auto& sites = groups[j].sites;
        if (static_cast<int>(sites.size()) > slot &&
            sites[static_cast<std::size_t>(slot)] == site) {
          sum += norms[j];
          ++count;
        }
      }
      if (sum > mx.induced1) {
        mx.induced1 = sum;
        mx.n_ind = count;
      }
    }
  }
  return mx;
}

std::string lattice_to_json(const DigitizedLattice& lat) {
  nlohmann::json j;
  j["dims"] = lat.dims();
  j["d"] = lat.d();
  j["m"] = lat.mass();
  j["lambda"] = lat.lambda();
  j["n_q"] = lat.dig().n_q;
  j["boundary"] = lat.periodic() ? "periodic" : "open";
  j["digitization"] = {{"phi_max", lat.dig().phi_max},
                       {"d_phi", lat.dig().d_phi},
                       {"pi_max", lat.dig().pi_max},
                       {"d_pi", lat.dig().d_pi}};
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : lat.terms()) {
    nlohmann::json jt;
    jt["sites"] = t.sites;
    switch (t.kind) {
      case LatticeTerm::Kind::PiSquared: jt["kind"] = "pi2"; break;
      case LatticeTerm::Kind::PhiSquared: jt["kind"] = "phi2"; break;
      case LatticeTerm::Kind::PhiQuartic: jt["kind"] = "phi4"; break;
      case LatticeTerm::Kind::Link: jt["kind"] = "link"; break;
    }
    jt["basis"] = t.basis == Basis::Momentum ? "momentum" : "field";
    nlohmann::json sum = nlohmann::json::array();
    for (const auto& [p, c] : t.local_sum.terms())
      sum.push_back(
          {{"paulis", p.reversed()}, {"re", c.real()}, {"im", c.imag()}});
    jt["pauli_sum"] = sum;
    terms.push_back(jt);
  }
  j["terms"] = terms;

  const HamiltonianMetrics mx = compute_metrics(lat);
  j["metrics"] = {{"N_H", mx.n_h},           {"N_P", mx.n_p},
                  {"c_P", mx.c_p},           {"norm1", mx.norm1},
                  {"induced1", mx.induced1}, {"N_ind", mx.n_ind}};
  return j.dump(2);
}

}  // namespace latticesim
