// Copyright 2026 The sixq authors
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

#include "sixq/entanglement.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace sixq {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m.at(r, c);
  }
  return out;
}

void check_keep_indices(int n_qubits, const std::vector<int>& keep) {
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep set is empty");
  }
  std::vector<bool> seen(n_qubits + 1, false);
  for (int q : keep) {
    if (q < 1 || q > n_qubits) {
      throw std::invalid_argument("partial_trace: qubit index out of range");
    }
    if (seen[q]) {
      throw std::invalid_argument("partial_trace: duplicate qubit index");
    }
    seen[q] = true;
  }
}

// Splits a global basis index into (kept part, traced part) index pair.
struct IndexSplit {
  int n_qubits;
  std::vector<int> keep;    // 1-based, in output order
  std::vector<int> traced;  // 1-based, ascending

  explicit IndexSplit(int n, const std::vector<int>& keep_list)
      : n_qubits(n), keep(keep_list) {
    std::vector<bool> kept(n + 1, false);
    for (int q : keep) kept[q] = true;
    for (int q = 1; q <= n; ++q) {
      if (!kept[q]) traced.push_back(q);
    }
  }

  static int bit_of(std::size_t index, int qubit, int n) {
    return static_cast<int>((index >> (n - qubit)) & 1u);
  }

  std::size_t kept_index(std::size_t global) const {
    std::size_t out = 0;
    for (int q : keep) out = (out << 1) | bit_of(global, q, n_qubits);
    return out;
  }

  std::size_t traced_index(std::size_t global) const {
    std::size_t out = 0;
    for (int q : traced) out = (out << 1) | bit_of(global, q, n_qubits);
    return out;
  }
};

}  // namespace

DensityMatrix::DensityMatrix(int n_qubits, ComplexMatrix m)
    : n_qubits_(n_qubits), matrix_(std::move(m)) {
  std::size_t d = std::size_t{1} << n_qubits_;
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw std::invalid_argument("DensityMatrix: shape != 2^n x 2^n");
  }
  if (!matrix_.finite()) {
    throw std::invalid_argument("DensityMatrix: non-finite entry");
  }
  if (matrix_.max_abs_diff(matrix_.dagger()) > 1e-8) {
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  }
  Complex tr{0.0, 0.0};
  for (std::size_t i = 0; i < d; ++i) tr += matrix_.at(i, i);
  if (std::abs(tr - Complex{1.0, 0.0}) > 1e-8) {
    throw std::invalid_argument("DensityMatrix: trace != 1");
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& s) {
  return DensityMatrix(s.n_qubits(), outer_product(s.amps(), s.amps()));
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  std::size_t d = std::size_t{1} << n_qubits;
  return DensityMatrix(
      n_qubits, ComplexMatrix::identity(d).scaled_by(1.0 / static_cast<double>(d)));
}

std::vector<double> DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(matrix_));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("DensityMatrix::eigenvalues: solver failed");
  }
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

bool DensityMatrix::is_positive_semidefinite(double tol) const {
  for (double ev : eigenvalues()) {
    if (ev < -tol) return false;
  }
  return true;
}

DensityMatrix partial_trace(const PureState& state, const std::vector<int>& keep) {
  check_keep_indices(state.n_qubits(), keep);
  IndexSplit split(state.n_qubits(), keep);
  std::size_t kept_dim = std::size_t{1} << keep.size();
  std::size_t dim = state.dim();

  // Bucket amplitudes by traced index, then rho = sum_t |v_t><v_t|.
  std::size_t traced_dim = dim / kept_dim;
  std::vector<CVector> buckets(traced_dim, CVector(kept_dim, Complex{0.0, 0.0}));
  for (std::size_t g = 0; g < dim; ++g) {
    buckets[split.traced_index(g)][split.kept_index(g)] = state.amp(g);
  }
  ComplexMatrix rho(kept_dim, kept_dim);
  for (const CVector& v : buckets) {
    for (std::size_t r = 0; r < kept_dim; ++r) {
      if (v[r] == Complex{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < kept_dim; ++c) {
        rho.at(r, c) += v[r] * std::conj(v[c]);
      }
    }
  }
  return DensityMatrix(static_cast<int>(keep.size()), std::move(rho));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  check_keep_indices(rho.n_qubits(), keep);
  IndexSplit split(rho.n_qubits(), keep);
  std::size_t kept_dim = std::size_t{1} << keep.size();
  std::size_t dim = rho.dim();

  ComplexMatrix out(kept_dim, kept_dim);
  for (std::size_t g1 = 0; g1 < dim; ++g1) {
    std::size_t t1 = split.traced_index(g1);
    std::size_t k1 = split.kept_index(g1);
    for (std::size_t g2 = 0; g2 < dim; ++g2) {
      if (split.traced_index(g2) != t1) continue;
      out.at(k1, split.kept_index(g2)) += rho.matrix().at(g1, g2);
    }
  }
  return DensityMatrix(static_cast<int>(keep.size()), std::move(out));
}

double purity(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.matrix();
  double acc = 0.0;
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  for (const Complex& z : m.entries()) acc += std::norm(z);
  return acc;
}

double concurrence(const DensityMatrix& rho) {
  if (rho.n_qubits() != 2) {
    throw std::invalid_argument("concurrence: need a two-qubit state");
  }
  if (!rho.is_positive_semidefinite(kDefaultTol)) {
    throw std::invalid_argument("concurrence: input not PSD");
  }

  Eigen::MatrixXcd r = to_eigen(rho.matrix());

  Eigen::MatrixXcd flip = Eigen::MatrixXcd::Zero(4, 4);
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;
  Eigen::MatrixXcd rho_tilde = flip * r.conjugate() * flip;

  // Hermitian route: eigenvalues of sqrt(rho) rho_tilde sqrt(rho) equal the
  // squared Wootters lambdas and stay real under numerical noise.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> rho_solver(r);
  if (rho_solver.info() != Eigen::Success) {
    throw std::runtime_error("concurrence: eigensolver failed");
  }
  Eigen::VectorXd clamped = rho_solver.eigenvalues().cwiseMax(0.0);
  Eigen::MatrixXcd sqrt_rho = rho_solver.eigenvectors() *
                              clamped.cwiseSqrt().asDiagonal() *
                              rho_solver.eigenvectors().adjoint();

  Eigen::MatrixXcd mid = sqrt_rho * rho_tilde * sqrt_rho;
  // Symmetrize away the anti-Hermitian drift before the final solve.
  mid = 0.5 * (mid + mid.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> mid_solver(mid);
  if (mid_solver.info() != Eigen::Success) {
    throw std::runtime_error("concurrence: eigensolver failed");
  }

  std::vector<double> lambdas;
  for (int i = 0; i < 4; ++i) {
    lambdas.push_back(std::sqrt(std::max(0.0, mid_solver.eigenvalues()(i))));
  }
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

double one_tangle(const PureState& state, int focus) {
  DensityMatrix marginal = partial_trace(state, {focus});
  const ComplexMatrix& m = marginal.matrix();
  Complex det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  return std::clamp(4.0 * det.real(), 0.0, 1.0);
}

MonogamyReport monogamy_check(const PureState& state, int focus) {
  if (focus < 1 || focus > state.n_qubits()) {
    throw std::invalid_argument("monogamy_check: focus out of range");
  }
  MonogamyReport report;
  report.focus_qubit = focus;
  report.one_tangle = one_tangle(state, focus);
  double pair_sum = 0.0;
  for (int q = 1; q <= state.n_qubits(); ++q) {
    if (q == focus) continue;
    double c = concurrence(partial_trace(state, {focus, q}));
    report.partners.push_back(q);
    report.pairwise_tangles.push_back(c * c);
    pair_sum += c * c;
  }
  report.slack = report.one_tangle - pair_sum;
  return report;
}

namespace {

void for_each_subset(int n, int k, int start, std::vector<int>& current,
                     const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(current.size()) == k) {
    fn(current);
    return;
  }
  for (int q = start; q <= n; ++q) {
    current.push_back(q);
    for_each_subset(n, k, q + 1, current, fn);
    current.pop_back();
  }
}

}  // namespace

double mixedness_report(const PureState& state, int k) {
  if (k < 1 || k >= state.n_qubits()) {
    throw std::invalid_argument("mixedness_report: need 1 <= k < n");
  }
  double scale = 1.0 / static_cast<double>(std::size_t{1} << k);
  ComplexMatrix target =
      ComplexMatrix::identity(std::size_t{1} << k).scaled_by(scale);
  double worst = 0.0;
  std::vector<int> current;
  for_each_subset(state.n_qubits(), k, 1, current, [&](const std::vector<int>& subset) {
    DensityMatrix marginal = partial_trace(state, subset);
    worst = std::max(worst, marginal.matrix().max_abs_diff(target));
  });
  return worst;
}

}  // namespace sixq
