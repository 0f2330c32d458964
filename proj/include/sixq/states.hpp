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

#ifndef SIXQ_STATES_HPP
#define SIXQ_STATES_HPP

#include <cstdint>
#include <string>

#include "sixq/linalg.hpp"

namespace sixq {

// Qubit 1 is the most significant bit: |b1 b2 ... bn> lives at index
// sum(b_k * 2^(n-k)). All labels and tables in this project read left to
// right in that order.

/// Normalized pure state over n labeled qubits.
class PureState {
 public:
  PureState(int n_qubits, CVector amplitudes);

  /// Builds from an unnormalized vector by rescaling.
  static PureState from_unnormalized(int n_qubits, const CVector& amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const CVector& amps() const { return amps_; }
  Complex amp(std::size_t index) const { return amps_[index]; }

 private:
  int n_qubits_;
  CVector amps_;
};

PureState tensor(const PureState& a, const PureState& b);

/// |<a|b>|^2
double fidelity(const PureState& a, const PureState& b);

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// phi+- = (|00> +- |11>)/sqrt2, psi+- = (|01> +- |10>)/sqrt2.
PureState bell(BellKind kind);

/// The six-qubit Borras channel state, assembled block by block; it has 32
/// nonzero amplitudes, all of magnitude 1/(4 sqrt 2).
PureState borras();

/// Three-qubit collapse states zeta_000 ... zeta_111; together they form an
/// orthonormal basis of the three-qubit space.
PureState zeta(const std::string& label);

/// zeta_i for i in 1..8, the numbering used by the five-particle measurement
/// tables (zeta_1 = zeta_000, ..., zeta_8 = zeta_111).
PureState zeta_indexed(int i);

/// Four-qubit eta_1 ... eta_4; mutually orthonormal. The Bell factor sits on
/// the first two qubits, the computational factor on the last two.
PureState eta(int i);

/// Haar-uniform random state: i.i.d. standard-normal real and imaginary
/// parts, then normalized. Deterministic per seed across platforms.
PureState random_state(int n_qubits, std::uint64_t seed);

/// The four amplitudes of an arbitrary two-qubit input, stored in the
/// canonical ket order (c00, c01, c10, c11).
struct CoefficientQuad {
  Complex c00, c01, c10, c11;

  PureState as_state() const;
  static CoefficientQuad from_state(const PureState& s);
  static CoefficientQuad random(std::uint64_t seed);
  /// The k-th computational basis quad (k = 0..3 in canonical order).
  static CoefficientQuad basis(int k);
};

}  // namespace sixq

#endif  // SIXQ_STATES_HPP
