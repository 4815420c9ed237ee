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

#include "latticesim/pauli.hpp"

#include <algorithm>
#include <cmath>

namespace latticesim {

namespace {

constexpr int kMaxDenseQubits = 12;

bool is_power_of_two(Eigen::Index x) { return x > 0 && (x & (x - 1)) == 0; }

int log2_exact(Eigen::Index x) {
  int n = 0;
  while ((Eigen::Index(1) << n) < x) ++n;
  return n;
}

Matrix pauli_2x2(char op) {
  Matrix m(2, 2);
  const Complex i(0, 1);
  switch (op) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw Error(ErrorCode::BAD_ARGS, "unknown Pauli op");
  }
  return m;
}

}  // namespace

PauliString::PauliString(std::string ops) : ops_(std::move(ops)) {
  for (char c : ops_) {
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
      throw Error(ErrorCode::BAD_ARGS, "invalid Pauli character in string");
  }
}

PauliString PauliString::identity(int n) {
  return PauliString(std::string(static_cast<std::size_t>(n), 'I'));
}

PauliString PauliString::single_z(int n, int q) {
  std::string s(static_cast<std::size_t>(n), 'I');
  s[static_cast<std::size_t>(q)] = 'Z';
  return PauliString(s);
}

bool PauliString::is_identity() const {
  return ops_.find_first_not_of('I') == std::string::npos;
}

bool PauliString::is_diagonal() const {
  return ops_.find_first_of("XY") == std::string::npos;
}

int PauliString::weight() const {
  return static_cast<int>(
      std::count_if(ops_.begin(), ops_.end(), [](char c) { return c != 'I'; }));
}

std::string PauliString::reversed() const {
  return std::string(ops_.rbegin(), ops_.rend());
}

void PauliSum::add(const PauliString& p, Complex c) {
  if (p.n() != n_)
    throw Error(ErrorCode::BAD_DIM, "Pauli string size does not match sum");
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    if (c != Complex(0)) terms_.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second == Complex(0)) terms_.erase(it);
}

void PauliSum::add(const PauliSum& other) {
  if (other.n_ != n_)
    throw Error(ErrorCode::BAD_DIM, "qubit counts differ in PauliSum add");
  for (const auto& [p, c] : other.terms_) add(p, c);
}

Complex PauliSum::coeff(const PauliString& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Complex(0) : it->second;
}

PauliSum& PauliSum::operator*=(Complex c) {
  if (c == Complex(0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

PauliSum PauliSum::pruned(double eps) const {
  PauliSum out(n_);
  for (const auto& [p, c] : terms_)
    if (std::abs(c) > eps) out.terms_.emplace(p, c);
  return out;
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& [p, c] : terms_)
    if (std::abs(c.imag()) > tol) return false;
  return true;
}

bool PauliSum::is_diagonal() const {
  for (const auto& [p, c] : terms_)
    if (!p.is_diagonal()) return false;
  return true;
}

Complex PauliSum::identity_coeff() const {
  return coeff(PauliString::identity(n_));
}

PauliSum PauliSum::without_identity(Complex* shift) const {
  PauliSum out(n_);
  Complex id(0);
  for (const auto& [p, c] : terms_) {
    if (p.is_identity())
      id = c;
    else
      out.terms_.emplace(p, c);
  }
  if (shift) *shift = id;
  return out;
}

double PauliSum::max_abs_coeff() const {
  double m = 0;
  for (const auto& [p, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

double PauliSum::one_norm_of_coeffs() const {
  double s = 0;
  for (const auto& [p, c] : terms_) s += std::abs(c);
  return s;
}

Matrix pauli_string_matrix(const PauliString& p) {
  if (p.n() > kMaxDenseQubits)
    throw Error(ErrorCode::TOO_LARGE, "dense Pauli beyond 12 qubits");
  Matrix m = Matrix::Identity(1, 1);
  // Qubit 0 is least significant: full = op_{n-1} (x) ... (x) op_0.
  for (int q = 0; q < p.n(); ++q) {
    const Matrix g = pauli_2x2(p.op(q));
    Matrix next(m.rows() * 2, m.cols() * 2);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        next.block(a * m.rows(), b * m.cols(), m.rows(), m.cols()) =
            g(a, b) * m;
    m = std::move(next);
  }
  return m;
}

Matrix to_matrix(const PauliSum& s) {
  if (s.n() > kMaxDenseQubits)
    throw Error(ErrorCode::TOO_LARGE, "dense PauliSum beyond 12 qubits");
  const Eigen::Index dim = Eigen::Index(1) << s.n();
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& [p, c] : s.terms()) m += c * pauli_string_matrix(p);
  return m;
}

namespace {

// Recursive coefficient extraction: splitting on the most significant qubit,
// M = I (x) R_I + Z (x) R_Z + X (x) R_X + Y (x) R_Y with
// R_I = (M00+M11)/2, R_Z = (M00-M11)/2, R_X = (M01+M10)/2,
// R_Y = i (M01-M10)/2. Total work O(n 4^n) instead of 4^n traces.
void decompose_rec(const Matrix& m, std::string& suffix, PauliSum& out,
                   double prune_eps) {
  const Eigen::Index d = m.rows();
  if (d == 1) {
    Complex c = m(0, 0);
    if (std::abs(c) > prune_eps)
      out.add(PauliString(std::string(suffix.rbegin(), suffix.rend())), c);
    return;
  }
  const Eigen::Index h = d / 2;
  const auto m00 = m.topLeftCorner(h, h);
  const auto m01 = m.topRightCorner(h, h);
  const auto m10 = m.bottomLeftCorner(h, h);
  const auto m11 = m.bottomRightCorner(h, h);
  const Complex i(0, 1);
  struct Branch {
    char op;
    Matrix r;
  };
  const Branch branches[4] = {
      {'I', 0.5 * (m00 + m11)},
      {'X', 0.5 * (m01 + m10)},
      {'Y', 0.5 * i * (m01 - m10)},
      {'Z', 0.5 * (m00 - m11)},
  };
  for (const auto& b : branches) {
    // Cheap cutoff: a branch whose largest entry cannot produce a surviving
    // coefficient is dropped whole.
    if (b.r.cwiseAbs().maxCoeff() <= prune_eps) continue;
    suffix.push_back(b.op);
    decompose_rec(b.r, suffix, out, prune_eps);
    suffix.pop_back();
  }
}

}  // namespace

PauliSum decompose_hermitian(const Matrix& m, double prune_eps,
                             double herm_tol) {
  if (m.rows() != m.cols() || !is_power_of_two(m.rows()))
    throw Error(ErrorCode::BAD_DIM, "matrix dimension is not a power of two");
  const int n = log2_exact(m.rows());
  if (n > kMaxDenseQubits)
    throw Error(ErrorCode::TOO_LARGE, "decomposition beyond 12 qubits");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > herm_tol)
    throw Error(ErrorCode::NON_HERMITIAN, "matrix is not Hermitian");

  PauliSum out(n);
  std::string suffix;
  suffix.reserve(static_cast<std::size_t>(n));
  decompose_rec(m, suffix, out, prune_eps);
  return out;
}

PauliSum decompose_evenly_spaced_diagonal(int n_q, double v_min, double step) {
  if (n_q < 1) throw Error(ErrorCode::BAD_ARGS, "n_q must be at least 1");
  if (step <= 0) throw Error(ErrorCode::BAD_ARGS, "step must be positive");
  // With value(b) = v_min + b*step and b_j = (1 - z_j)/2 this gives
  // value = mean - (step/2) sum_j 2^j z_j, mean = v_min + step (2^n_q - 1)/2.
  PauliSum out(n_q);
  const double mean =
      v_min + step * 0.5 * (std::pow(2.0, n_q) - 1.0);
  out.add(PauliString::identity(n_q), mean);
  for (int j = 0; j < n_q; ++j)
    out.add(PauliString::single_z(n_q, j), -step * 0.5 * std::pow(2.0, j));
  return out.pruned(0.0);
}

PauliSum multiply_diagonal(const PauliSum& a, const PauliSum& b) {
  if (a.n() != b.n())
    throw Error(ErrorCode::BAD_DIM, "qubit counts differ in product");
  if (!a.is_diagonal() || !b.is_diagonal())
    throw Error(ErrorCode::BAD_ARGS, "operands must be diagonal sums");
  PauliSum out(a.n());
  for (const auto& [p, c] : a.terms()) {
    for (const auto& [q, d] : b.terms()) {
      std::string prod(static_cast<std::size_t>(a.n()), 'I');
      for (int k = 0; k < a.n(); ++k) {
        const bool za = p.op(k) == 'Z', zb = q.op(k) == 'Z';
        prod[static_cast<std::size_t>(k)] = (za != zb) ? 'Z' : 'I';
      }
      out.add(PauliString(std::move(prod)), c * d);
    }
  }
  return out;
}

}  // namespace latticesim
