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

#ifndef SIXQ_CORRECTION_HPP
#define SIXQ_CORRECTION_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sixq/linalg.hpp"
#include "sixq/states.hpp"

namespace sixq {

struct BranchId {
  std::string protocol;
  std::string alice_outcome;
  std::string bob_outcome;  // "-" when the branch has no second measurement

  std::string str() const {
    return protocol + "/" + alice_outcome + "/" + bob_outcome;
  }
};

/// Thrown when a branch cannot be corrected: a probe input reaches the
/// outcome path with zero probability, or the probe collapses fail to be
/// orthonormal (information about the input was destroyed).
struct NonCorrectableBranch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Receiver-side unitary restoring the input on one classical outcome path.
struct CorrectionUnitary {
  std::size_t dim = 0;
  ComplexMatrix matrix;
  BranchId branch;
  /// Signed Pauli tensor equal to the matrix, when one exists.
  std::optional<std::string> pauli_factorization;
};

/// true iff ||m^dagger m - I||_max <= tol. Throws on non-square input.
bool is_unitary(const ComplexMatrix& m, double tol = kDefaultTol);

/// U = sum_i |target_i><source_i|. Both lists must be orthonormal and span
/// the full space; the result is then unitary by construction.
ComplexMatrix basis_change(const std::vector<CVector>& source,
                           const std::vector<CVector>& target,
                           double tol = kDefaultTol);

/// Exhaustive search over phase * P_1 tensor ... tensor P_k with
/// P in {I,X,Y,Z} and phase in {1,-1,i,-i}; returns e.g. "-X(x)Z" on a hit.
std::optional<std::string> pauli_tensor_factorization(const ComplexMatrix& m,
                                                      double tol = kDefaultTol);

/// Derives the correction for one outcome path. `collapse_for_probe` replays
/// the protocol on the given computational-ket input, forcing the path by
/// projection, and returns the receiver's pre-correction state (no value if
/// the path has zero probability for that probe). The probe collapses are
/// checked to be orthonormal; the unitary maps collapse_i to ket i, so it is
/// input-independent by linearity.
CorrectionUnitary derive_correction_from_probes(
    const std::function<std::optional<PureState>(const PureState& probe)>&
        collapse_for_probe,
    int input_qubits, const BranchId& branch, double tol = kDefaultTol);

/// Spec'd per-protocol entry point; protocol ids: "teleport3", "qsts1-bell",
/// "qsts1-computational", "qsts2-iv", "qsts2-vi". Outcome labels follow the
/// corresponding basis labels ("000000", "r1+", "phi+", "00", "0", "h+").
/// Defined alongside the protocol engine. Results are memoized.
const CorrectionUnitary& derive_branch_correction(const std::string& protocol_id,
                                                  const std::string& alice_outcome,
                                                  const std::string& bob_outcome);

}  // namespace sixq

#endif  // SIXQ_CORRECTION_HPP
