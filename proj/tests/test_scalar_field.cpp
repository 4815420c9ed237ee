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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "latticesim/scalar_field.hpp"

using namespace latticesim;

namespace {

// Independent assembly of the digitized Hamiltonian from raw field values,
// bypassing the Pauli machinery entirely.
Matrix brute_force_hamiltonian(const std::vector<int>& dims, double m,
                               double lambda, int n_q) {
  const Digitization dg = digitize(n_q);
  int n_sites = 1;
  for (int e : dims) n_sites *= e;
  const int n = n_sites * n_q;
  const Eigen::Index dim = Eigen::Index(1) << n;
  const int nv = 1 << n_q;

  auto field_value = [&](Eigen::Index basis, int site) {
    const int local = static_cast<int>((basis >> (site * n_q)) & (nv - 1));
    return -dg.phi_max + local * dg.d_phi;
  };

  Matrix h = Matrix::Zero(dim, dim);
  // field-diagonal part
  for (Eigen::Index b = 0; b < dim; ++b) {
    double v = 0;
    for (int s = 0; s < n_sites; ++s) {
      const double phi = field_value(b, s);
      v += 0.5 * m * m * phi * phi + lambda / 24.0 * std::pow(phi, 4);
    }
    // open-boundary chain links (only 1D used in this oracle)
    for (int s = 0; s + 1 < n_sites; ++s) {
      const double d = field_value(b, s + 1) - field_value(b, s);
      v += 0.5 * d * d;
    }
    h(b, b) += v;
  }
  // momentum part per site
  Matrix pi2 = Matrix::Zero(nv, nv);
  for (int bb = 0; bb < nv; ++bb) {
    const double p = -dg.pi_max + bb * dg.d_pi;
    pi2(bb, bb) = p * p;
  }
  const Matrix f = symmetric_ft(nv);
  const Matrix pi2_field = f * pi2 * f.adjoint();
  for (int s = 0; s < n_sites; ++s) {
    std::vector<int> qs;
    for (int j = 0; j < n_q; ++j) qs.push_back(s * n_q + j);
    h += 0.5 * embed(pi2_field, qs, n);
  }
  return h;
}

double ground_energy(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  return es.eigenvalues()(0);
}

}  // namespace

TEST_CASE("digitization closed forms") {
  Digitization d1 = digitize(1);
  CHECK(d1.phi_max ==
        doctest::Approx(2.0 * std::sqrt(2.0 * std::numbers::pi / 5.0)));
  CHECK(d1.phi_max == doctest::Approx(2.2420).epsilon(1e-4));

  Digitization d2 = digitize(2);
  CHECK(d2.phi_max == doctest::Approx(3.3422).epsilon(1e-4));
  CHECK(d2.d_phi == doctest::Approx(2.2281).epsilon(1e-4));
  // FT-conjugate grid: d_phi * d_pi = 2 pi / N, pi_max = (pi/d_phi)(N-1)/N
  CHECK(d2.d_phi * d2.d_pi ==
        doctest::Approx(2.0 * std::numbers::pi / 4.0));
  CHECK(d2.pi_max ==
        doctest::Approx(std::numbers::pi / d2.d_phi * 3.0 / 4.0));
  CHECK(d2.d_pi == doctest::Approx(2.0 * d2.pi_max / 3.0));

  // phi_max * d_phi -> 2 pi as n_q grows
  Digitization d8 = digitize(8);
  CHECK(d8.phi_max * d8.d_phi ==
        doctest::Approx(2.0 * std::numbers::pi).epsilon(0.05));
}

TEST_CASE("single-site lambda=0 lattice approximates the oscillator") {
  // With the pinned phi_max closed form the 4-point grid lands ~0.25 above
  // the continuum value; the deviation shrinks exponentially with n_q.
  DigitizedLattice lat({1}, 1.0, 0.0, 2);
  CHECK(lat.n_qubits() == 2);
  CHECK(std::abs(ground_energy(lat.dense_hamiltonian()) - 0.5) < 0.3);
  DigitizedLattice lat4({1}, 1.0, 0.0, 4);
  CHECK(std::abs(ground_energy(lat4.dense_hamiltonian()) - 0.5) < 1e-4);
}

TEST_CASE("dense assembly equals brute-force digitized operators") {
  struct Case {
    std::vector<int> dims;
    double m, lambda;
    int n_q;
  };
  for (const Case& c : {Case{{1}, 1.0, 0.0, 2}, Case{{1}, 1.0, 32.0, 3},
                        Case{{2}, 1.0, 0.0, 2}, Case{{3}, 0.7, 4.0, 2},
                        Case{{2}, 1.3, 8.0, 3}}) {
    DigitizedLattice lat(c.dims, c.m, c.lambda, c.n_q);
    Matrix oracle = brute_force_hamiltonian(c.dims, c.m, c.lambda, c.n_q);
    CHECK((lat.dense_hamiltonian() - oracle).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("two-site lattice matches manual Kronecker assembly") {
  const int n_q = 2;
  DigitizedLattice lat({2}, 1.0, 0.0, n_q);
  Matrix oracle = brute_force_hamiltonian({2}, 1.0, 0.0, n_q);
  CHECK((lat.dense_hamiltonian() - oracle).cwiseAbs().maxCoeff() < 1e-12);
  // exactly one link for two sites
  int links = 0;
  for (const auto& t : lat.terms())
    if (t.kind == LatticeTerm::Kind::Link) ++links;
  CHECK(links == 1);
}

TEST_CASE("terms touch at most two adjacent sites") {
  DigitizedLattice lat({2, 2}, 1.0, 4.0, 1);
  CHECK(lat.n_sites() == 4);
  for (const auto& t : lat.terms()) {
    CHECK(t.sites.size() <= 2);
    if (t.sites.size() == 2) {
      const int a = t.sites[0], b = t.sites[1];
      const int dx = std::abs(a % 2 - b % 2), dy = std::abs(a / 2 - b / 2);
      CHECK(dx + dy == 1);
    }
  }
  // 2x2 open lattice has 4 links
  int links = 0;
  for (const auto& t : lat.terms())
    if (t.kind == LatticeTerm::Kind::Link) ++links;
  CHECK(links == 4);
}

TEST_CASE("metrics for trivial and chain lattices") {
  SUBCASE("single site, lambda=0") {
    DigitizedLattice lat({1}, 1.0, 0.0, 2);
    HamiltonianMetrics mx = compute_metrics(lat);
    CHECK(mx.n_h == 1);
    CHECK(mx.n_ind == 1);
  }
  SUBCASE("three-site chain") {
    DigitizedLattice lat({3}, 1.0, 4.0, 2);
    HamiltonianMetrics mx = compute_metrics(lat);
    CHECK(mx.n_h == 5);  // 3 site terms + 2 links
    // exhaustive recomputation of the induced maximum
    const auto groups = lat.summands();
    double best = 0;
    long long best_count = 0;
    for (int slot = 0; slot < 2; ++slot)
      for (int site = 0; site < 3; ++site) {
        double sum = 0;
        long long cnt = 0;
        for (const auto& g : groups) {
          if (static_cast<int>(g.sites.size()) > slot &&
              g.sites[static_cast<std::size_t>(slot)] == site) {
            const Eigen::Index d = Eigen::Index(1)
                                   << (2 * static_cast<int>(g.sites.size()));
            Matrix m = Matrix::Zero(d, d);
            for (const auto* piece : g.pieces) {
              Matrix local = to_matrix(piece->local_sum);
              if (piece->basis == Basis::Momentum) {
                Matrix f = symmetric_ft(4);
                local = f * local * f.adjoint();
              }
              m += local;
            }
            sum += spectral_norm(m);
            ++cnt;
          }
        }
        if (sum > best) {
          best = sum;
          best_count = cnt;
        }
      }
    CHECK(mx.induced1 == doctest::Approx(best));
    CHECK(mx.n_ind == best_count);
  }
}

TEST_CASE("c_P is attained on the quartic piece at strong coupling") {
  DigitizedLattice lat({1}, 1.0, 32.0, 3);
  HamiltonianMetrics mx = compute_metrics(lat);
  // direct enumeration over every stored piece
  double cmax = 0;
  for (const auto& t : lat.terms())
    cmax = std::max(cmax, t.local_sum.max_abs_coeff());
  CHECK(mx.c_p == doctest::Approx(cmax));

  // quartic piece dominates
  double quartic_max = 0;
  for (const auto& t : lat.terms())
    if (t.kind == LatticeTerm::Kind::PhiQuartic)
      quartic_max = std::max(quartic_max, t.local_sum.max_abs_coeff());
  CHECK(mx.c_p == doctest::Approx(quartic_max));
}

TEST_CASE("N_P is attained on the quartic piece for n_q >= 2") {
  for (int n_q : {2, 3, 4}) {
    DigitizedLattice lat({1}, 1.0, 32.0, n_q);
    std::size_t quartic = 0, phi2 = 0, pi2 = 0;
    for (const auto& t : lat.terms()) {
      if (t.kind == LatticeTerm::Kind::PhiQuartic) quartic = t.local_sum.size();
      if (t.kind == LatticeTerm::Kind::PhiSquared) phi2 = t.local_sum.size();
      if (t.kind == LatticeTerm::Kind::PiSquared) pi2 = t.local_sum.size();
    }
    CHECK(quartic >= phi2);
    CHECK(quartic >= pi2);
  }
}

TEST_CASE("per-term norm obeys the c_P N_P bound") {
  DigitizedLattice lat({2}, 1.0, 8.0, 2);
  HamiltonianMetrics mx = compute_metrics(lat);
  for (const auto& g : lat.summands()) {
    const Eigen::Index d = Eigen::Index(1)
                           << (2 * static_cast<int>(g.sites.size()));
    Matrix m = Matrix::Zero(d, d);
    for (const auto* piece : g.pieces) {
      Matrix local = to_matrix(piece->local_sum);
      if (piece->basis == Basis::Momentum) {
        Matrix f = symmetric_ft(4);
        local = f * local * f.adjoint();
      }
      m += local;
    }
    CHECK(spectral_norm(m) <= mx.c_p * mx.n_p + 1e-9);
  }
}

TEST_CASE("digitized oscillator ground energy converges to 1/2") {
  double prev_err = 1e9;
  for (int n_q = 1; n_q <= 6; ++n_q) {
    DigitizedLattice lat({1}, 1.0, 0.0, n_q);
    const double err = std::abs(ground_energy(lat.dense_hamiltonian()) - 0.5);
    CHECK(err < prev_err + 1e-12);
    prev_err = err;
    if (n_q == 6) CHECK(err < 1e-3);
  }
}

TEST_CASE("ham.json is deterministic and carries metrics") {
  DigitizedLattice lat({1}, 1.0, 32.0, 2);
  std::string a = lattice_to_json(lat);
  std::string b = lattice_to_json(lat);
  CHECK(a == b);
  CHECK(a.find("\"N_H\"") != std::string::npos);
  CHECK(a.find("\"paulis\"") != std::string::npos);
}
