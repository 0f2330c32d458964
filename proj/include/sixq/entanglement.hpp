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

#ifndef SIXQ_ENTANGLEMENT_HPP
#define SIXQ_ENTANGLEMENT_HPP

#include <vector>

#include "sixq/linalg.hpp"
#include "sixq/states.hpp"

namespace sixq {

/// Density matrix over n qubits: Hermitian, unit trace.
class DensityMatrix {
 public:
  DensityMatrix(int n_qubits, ComplexMatrix m);

  static DensityMatrix from_pure(const PureState& s);
  static DensityMatrix maximally_mixed(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

  /// Eigenvalues in ascending order (real; the matrix is Hermitian).
  std::vector<double> eigenvalues() const;

  /// True when every eigenvalue is >= -tol.
  bool is_positive_semidefinite(double tol = kDefaultTol) const;

 private:
  int n_qubits_;
  ComplexMatrix matrix_;
};

/// Reduced state of `keep` (1-based qubit indices, in the order given).
DensityMatrix partial_trace(const PureState& state, const std::vector<int>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// tr(rho^2)
double purity(const DensityMatrix& rho);

/// Wootters concurrence of a two-qubit density matrix.
double concurrence(const DensityMatrix& rho);

/// Squared concurrence of one qubit against the rest of a pure state:
/// 4 det of the single-qubit marginal.
double one_tangle(const PureState& state, int focus);

struct MonogamyReport {
  int focus_qubit;
  std::vector<int> partners;
  std::vector<double> pairwise_tangles;  // C^2(focus, partner)
  double one_tangle;
  double slack;  // one_tangle - sum(pairwise)
};

MonogamyReport monogamy_check(const PureState& state, int focus);

/// Max-norm distance of the k-qubit marginals from identity/2^k, maximized
/// over every k-subset of qubits.
double mixedness_report(const PureState& state, int k);

}  // namespace sixq

#endif  // SIXQ_ENTANGLEMENT_HPP
