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

#include "latticesim/dense.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "latticesim/error.hpp"

namespace latticesim {

namespace {

bool is_power_of_two(Eigen::Index x) { return x > 0 && (x & (x - 1)) == 0; }

}  // namespace

int StateVector::n() const {
  Eigen::Index d = amps.size();
  if (!is_power_of_two(d))
    throw Error(ErrorCode::BAD_DIM, "state dimension is not a power of two");
  int n = 0;
  while ((Eigen::Index(1) << n) < d) ++n;
  return n;
}

int qubit_count(const Matrix& m) {
  if (m.rows() != m.cols() || !is_power_of_two(m.rows()))
    throw Error(ErrorCode::BAD_DIM, "operator dimension is not a power of two");
  int n = 0;
  while ((Eigen::Index(1) << n) < m.rows()) ++n;
  return n;
}

Matrix matrix_exp_hermitian(const Matrix& h, double t, double herm_tol) {
  qubit_count(h);
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > herm_tol)
    throw Error(ErrorCode::NON_HERMITIAN, "matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.adjoint()));
  const Eigen::VectorXd& ev = es.eigenvalues();
  Vector phases(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    phases(i) = std::polar(1.0, -ev(i) * t);
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

double spectral_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  if (m.rows() <= 1024 && m.cols() <= 1024 &&
      std::max(m.rows(), m.cols()) <= 256) {
    return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
  }
  // Power iteration on M^dagger M with a deterministic start; the singular
  // value is recovered as ||M v|| so tiny norms keep full relative accuracy.
  Vector v = Vector::Ones(m.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) += Complex(0.3 * std::cos(0.7 * double(i)),
                    0.2 * std::sin(1.3 * double(i)));
  v.normalize();
  double sigma = 0;
  for (int it = 0; it < 500; ++it) {
    Vector w = m * v;
    double s = w.norm();
    if (s == 0) return 0;
    Vector u = m.adjoint() * w;
    double un = u.norm();
    if (un == 0) return s;
    v = u / un;
    if (std::abs(s - sigma) <= 1e-14 * std::max(1.0, s) && it > 4) {
      sigma = s;
      break;
    }
    sigma = s;
  }
  return (m * v).norm();
}

Matrix embed(const Matrix& local, const std::vector<int>& qubits,
             int total_n) {
  const int k = qubit_count(local);
  if (static_cast<int>(qubits.size()) != k)
    throw Error(ErrorCode::BAD_SITES, "qubit list does not match operator");
  std::vector<bool> seen(static_cast<std::size_t>(total_n), false);
  for (int q : qubits) {
    if (q < 0 || q >= total_n)
      throw Error(ErrorCode::BAD_SITES, "qubit index out of range");
    if (seen[static_cast<std::size_t>(q)])
      throw Error(ErrorCode::BAD_SITES, "duplicate qubit index");
    seen[static_cast<std::size_t>(q)] = true;
  }
  if (total_n > 12)
    throw Error(ErrorCode::TOO_LARGE, "dense embedding beyond 12 qubits");

  const Eigen::Index dim = Eigen::Index(1) << total_n;
  const Eigen::Index ldim = Eigen::Index(1) << k;
  Matrix out = Matrix::Zero(dim, dim);

  Eigen::Index outside_mask = dim - 1;
  for (int q : qubits) outside_mask &= ~(Eigen::Index(1) << q);

  // Iterate over assignments of the untouched qubits.
  for (Eigen::Index outside = 0;; outside = (outside - outside_mask) &
                                            outside_mask) {
    for (Eigen::Index a = 0; a < ldim; ++a) {
      Eigen::Index row = outside;
      for (int j = 0; j < k; ++j)
        if ((a >> j) & 1) row |= Eigen::Index(1) << qubits[static_cast<std::size_t>(j)];
      for (Eigen::Index b = 0; b < ldim; ++b) {
        const Complex v = local(a, b);
        if (v == Complex(0)) continue;
        Eigen::Index col = outside;
        for (int j = 0; j < k; ++j)
          if ((b >> j) & 1)
            col |= Eigen::Index(1) << qubits[static_cast<std::size_t>(j)];
        out(row, col) = v;
      }
    }
    if (outside == outside_mask) break;
  }
  return out;
}

Matrix symmetric_ft(int n_values) {
  if (!is_power_of_two(n_values))
    throw Error(ErrorCode::BAD_DIM, "FT size must be a power of two");
  const double N = n_values;
  const double s = (N - 1.0) / 2.0;
  Matrix ft(n_values, n_values);
  for (int j = 0; j < n_values; ++j)
    for (int k = 0; k < n_values; ++k)
      ft(j, k) = std::polar(1.0 / std::sqrt(N),
                            2.0 * std::numbers::pi * (j - s) * (k - s) / N);
  return ft;
}

double unitarity_error(const Matrix& u) {
  return spectral_norm(u.adjoint() * u -
                       Matrix::Identity(u.rows(), u.cols()));
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  return (a - b).norm();
}

}  // namespace latticesim
