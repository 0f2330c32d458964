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

#ifndef SIXQ_PROTOCOLS_HPP
#define SIXQ_PROTOCOLS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sixq/correction.hpp"
#include "sixq/entanglement.hpp"
#include "sixq/measurement.hpp"
#include "sixq/states.hpp"

namespace sixq {

enum class Party { Alice, Bob, Charlie };

std::string party_name(Party p);

// Global register layout: input qubits first, then channel qubits 1..6.
// Teleportation: Alice = input 1-3 + channel 1-3, Bob = channel 4-6.
// Protocol 1:    Alice = input 1-2 + channel 1-2, Bob = channel 3-4,
//                Charlie = channel 5-6.
// Protocol 2:    Alice = input 1-2 + channel 1-3, Bob = channel 4,
//                Charlie = channel 5-6.
enum class ProtocolKind {
  Teleport3,
  Qsts1Bell,
  Qsts1Computational,
  Qsts2TableIV,
  Qsts2TableVI,
};

std::string protocol_id(ProtocolKind kind);
ProtocolKind protocol_from_id(const std::string& id);

struct MeasurementEvent {
  Party party;
  std::vector<int> qubits;  // global indices at protocol start
  std::string basis_id;
  std::string outcome;
  double probability;  // conditional on the path so far
};

struct ClassicalMessage {
  Party sender;
  Party receiver;
  std::string bits;
};

struct UnitaryEvent {
  Party party;
  BranchId branch;
};

using TranscriptEvent =
    std::variant<MeasurementEvent, ClassicalMessage, UnitaryEvent>;

enum class TranscriptStatus {
  Completed,
  /// Alice's five-particle measurement landed outside the 16-outcome
  /// codebook; no correction exists and the run stops after her measurement.
  UnlistedOutcome,
};

struct ProtocolTranscript {
  ProtocolKind kind;
  PureState input;
  std::vector<TranscriptEvent> events;
  std::optional<PureState> output;
  double fidelity = 0.0;
  /// Joint probability of this branch (product of the conditional
  /// measurement probabilities).
  double probability = 1.0;
  TranscriptStatus status = TranscriptStatus::Completed;
};

/// True when every unitary event is preceded by messages, delivered to the
/// acting party, whose bits determine its branch id.
bool causally_ordered(const ProtocolTranscript& t);

/// Message bits summed per (sender, receiver) edge.
std::map<std::pair<Party, Party>, int> cbit_accounting(const ProtocolTranscript& t);

// Teleportation of an arbitrary three-qubit state.
ProtocolTranscript teleport3_sample(const PureState& input, std::uint64_t seed);
std::vector<ProtocolTranscript> teleport3_enumerate(const PureState& input);

// Sharing of an arbitrary two-qubit state, protocol 1 (four-particle
// measurement; Bob picks the Bell or the computational basis).
enum class BobBasis { Bell, Computational };
ProtocolTranscript qsts1_sample(const PureState& input, BobBasis bob_basis,
                                std::uint64_t seed);
std::vector<ProtocolTranscript> qsts1_enumerate(const PureState& input,
                                                BobBasis bob_basis);

// Sharing of an arbitrary two-qubit state, protocol 2 (five-particle
// measurement; family IV pairs with a computational measurement by Bob,
// family VI with a Hadamard one).
enum class QstsFamily { TableIV, TableVI };
ProtocolTranscript qsts2_sample(const PureState& input, QstsFamily family,
                                std::uint64_t seed);
std::vector<ProtocolTranscript> qsts2_enumerate(const PureState& input,
                                                QstsFamily family);

// Path replay used by correction derivation, the table oracle, and the
// security checks. Outcome indices follow the protocol's basis ordering.

/// Alice's basis for the given protocol.
const OrthonormalBasis& alice_basis(ProtocolKind kind);
/// Bob's basis, absent for teleportation.
const OrthonormalBasis* bob_basis_of(ProtocolKind kind);

/// State of the unmeasured qubits after Alice's outcome, with its
/// probability; nullopt collapse when the outcome is unreachable.
struct PostAlice {
  double probability = 0.0;
  std::optional<PureState> state;
};
PostAlice post_alice_state(ProtocolKind kind, const PureState& input,
                           std::size_t alice_index);

/// Receiver's pre-correction state after Bob's outcome (teleportation: pass
/// bob_index = 0; Bob performs no measurement there).
struct PostBob {
  double conditional_probability = 0.0;
  std::optional<PureState> state;
};
PostBob post_bob_state(ProtocolKind kind, const PureState& input,
                       std::size_t alice_index, std::size_t bob_index);

/// Charlie's reduced state given Alice's outcome only (Bob's result unknown,
/// i.e. traced out). Defined for the two sharing protocols.
DensityMatrix charlie_state_given_alice(ProtocolKind kind, const PureState& input,
                                        std::size_t alice_index);

/// Number of listed Alice outcomes (the classical codebook size).
std::size_t alice_codebook_size(ProtocolKind kind);

}  // namespace sixq

#endif  // SIXQ_PROTOCOLS_HPP
