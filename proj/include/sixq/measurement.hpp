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

#ifndef SIXQ_MEASUREMENT_HPP
#define SIXQ_MEASUREMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sixq/states.hpp"

namespace sixq {

/// A projective measurement given as a list of mutually orthonormal states.
/// Complete when element_count == 2^n_qubits.
struct OrthonormalBasis {
  std::string id;
  int n_qubits = 0;
  std::vector<PureState> elements;
  std::vector<std::string> labels;

  std::size_t size() const { return elements.size(); }
  bool complete() const { return size() == (std::size_t{1} << n_qubits); }

  /// Largest deviation of the Gram matrix from identity.
  double gram_deviation() const;

  /// Largest entrywise deviation of sum |b><b| from identity.
  double completeness_deviation() const;

  std::size_t index_of(const std::string& label) const;
};

struct MeasurementOutcome {
  std::size_t index = 0;
  std::string label;
  double probability = 0.0;
  /// Post-measurement state of the unmeasured qubits, in their original
  /// relative order. Absent when the branch probability is below kZeroProb.
  std::optional<PureState> collapsed;
};

/// The 64-element generalized Bell family on six qubits:
///   B_{a,b} = 8^{-1/2} sum_i (-1)^{b.i} |i>|i xor a>,   a, b in {0,1}^3.
/// Labels are the six bits of a followed by b.
OrthonormalBasis generalized_bell_basis_6();

/// Alice's four-qubit basis for the first sharing protocol: eight ket
/// quadruples, each in two sign variants ("r1+" ... "r8-"). Complete.
OrthonormalBasis table1_basis();

/// Alice's five-qubit bases for the second sharing protocol. The 16 listed
/// elements come first; the 16 computational kets absent from them are
/// appended ("k.....") to complete the basis.
OrthonormalBasis table4_basis();
OrthonormalBasis table6_basis();

/// Number of listed (non-filler) elements in table4/table6 bases.
inline constexpr std::size_t kListedFiveQubitOutcomes = 16;

OrthonormalBasis bell_basis();
OrthonormalBasis computational_basis(int k);
OrthonormalBasis hadamard_basis();

/// One outcome per basis element; probabilities sum to 1 for a complete
/// basis. `measured_qubits` are distinct 1-based indices; the i-th listed
/// qubit carries the i-th (most significant first) bit of a basis label.
std::vector<MeasurementOutcome> measure_enumerate(
    const PureState& state, const std::vector<int>& measured_qubits,
    const OrthonormalBasis& basis);

/// Projection onto one basis element only.
MeasurementOutcome project_outcome(const PureState& state,
                                   const std::vector<int>& measured_qubits,
                                   const OrthonormalBasis& basis,
                                   std::size_t element_index);

/// Samples one outcome with the enumerated probabilities; deterministic for
/// a fixed seed.
MeasurementOutcome measure_sample(const PureState& state,
                                  const std::vector<int>& measured_qubits,
                                  const OrthonormalBasis& basis,
                                  std::uint64_t seed);

/// Text dump: one element per line; label, then 2^n comma-separated "re,im"
/// pairs at 17 significant digits.
std::string dump_basis(const OrthonormalBasis& basis);

}  // namespace sixq

#endif  // SIXQ_MEASUREMENT_HPP
