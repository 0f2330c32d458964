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

#include "sixq/protocols.hpp"

#include <mutex>
#include <stdexcept>

namespace sixq {

namespace {

std::string bits_string(std::size_t value, int width) {
  std::string out(width, '0');
  for (int i = 0; i < width; ++i) {
    if ((value >> (width - 1 - i)) & 1u) out[i] = '1';
  }
  return out;
}

std::size_t bits_value(const std::string& bits) {
  std::size_t out = 0;
  for (char c : bits) out = (out << 1) | static_cast<std::size_t>(c - '0');
  return out;
}

struct ProtocolShape {
  int input_qubits;
  std::vector<int> alice_qubits;     // global indices
  std::vector<int> bob_qubits;       // global indices ({} for teleportation)
  std::vector<int> bob_relative;     // indices into the post-Alice remainder
  std::vector<int> charlie_relative; // Charlie's qubits in the remainder
  Party receiver;
  int alice_message_bits;
  int bob_message_bits;
};

const ProtocolShape& shape_of(ProtocolKind kind) {
  static const ProtocolShape teleport{
      3, {1, 2, 3, 4, 5, 6}, {}, {}, {}, Party::Bob, 6, 0};
  static const ProtocolShape qsts1{
      2, {1, 2, 3, 4}, {5, 6}, {1, 2}, {3, 4}, Party::Charlie, 4, 2};
  static const ProtocolShape qsts2{
      2, {1, 2, 3, 4, 5}, {6}, {1}, {2, 3}, Party::Charlie, 4, 1};
  switch (kind) {
    case ProtocolKind::Teleport3:
      return teleport;
    case ProtocolKind::Qsts1Bell:
    case ProtocolKind::Qsts1Computational:
      return qsts1;
    case ProtocolKind::Qsts2TableIV:
    case ProtocolKind::Qsts2TableVI:
      return qsts2;
  }
  throw std::logic_error("shape_of: unknown protocol");
}

PureState global_state(ProtocolKind kind, const PureState& input) {
  if (input.n_qubits() != shape_of(kind).input_qubits) {
    throw std::invalid_argument(protocol_id(kind) + ": input qubit count");
  }
  static const PureState channel = borras();
  return tensor(input, channel);
}

std::uint64_t sub_seed(std::uint64_t seed, std::size_t step) {
  // splitmix64 step; keeps chained measurement draws independent.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (step + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::string party_name(Party p) {
  switch (p) {
    case Party::Alice:
      return "alice";
    case Party::Bob:
      return "bob";
    case Party::Charlie:
      return "charlie";
  }
  throw std::logic_error("party_name: unknown party");
}

std::string protocol_id(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::Teleport3:
      return "teleport3";
    case ProtocolKind::Qsts1Bell:
      return "qsts1-bell";
    case ProtocolKind::Qsts1Computational:
      return "qsts1-computational";
    case ProtocolKind::Qsts2TableIV:
      return "qsts2-iv";
    case ProtocolKind::Qsts2TableVI:
      return "qsts2-vi";
  }
  throw std::logic_error("protocol_id: unknown protocol");
}

ProtocolKind protocol_from_id(const std::string& id) {
  for (ProtocolKind kind :
       {ProtocolKind::Teleport3, ProtocolKind::Qsts1Bell,
        ProtocolKind::Qsts1Computational, ProtocolKind::Qsts2TableIV,
        ProtocolKind::Qsts2TableVI}) {
    if (protocol_id(kind) == id) return kind;
  }
  throw std::invalid_argument("unknown protocol id: " + id);
}

const OrthonormalBasis& alice_basis(ProtocolKind kind) {
  static const OrthonormalBasis b64 = generalized_bell_basis_6();
  static const OrthonormalBasis t1 = table1_basis();
  static const OrthonormalBasis t4 = table4_basis();
  static const OrthonormalBasis t6 = table6_basis();
  switch (kind) {
    case ProtocolKind::Teleport3:
      return b64;
    case ProtocolKind::Qsts1Bell:
    case ProtocolKind::Qsts1Computational:
      return t1;
    case ProtocolKind::Qsts2TableIV:
      return t4;
    case ProtocolKind::Qsts2TableVI:
      return t6;
  }
  throw std::logic_error("alice_basis: unknown protocol");
}

const OrthonormalBasis* bob_basis_of(ProtocolKind kind) {
  static const OrthonormalBasis bell4 = bell_basis();
  static const OrthonormalBasis comp2 = computational_basis(2);
  static const OrthonormalBasis comp1 = computational_basis(1);
  static const OrthonormalBasis had = hadamard_basis();
  switch (kind) {
    case ProtocolKind::Teleport3:
      return nullptr;
    case ProtocolKind::Qsts1Bell:
      return &bell4;
    case ProtocolKind::Qsts1Computational:
      return &comp2;
    case ProtocolKind::Qsts2TableIV:
      return &comp1;
    case ProtocolKind::Qsts2TableVI:
      return &had;
  }
  throw std::logic_error("bob_basis_of: unknown protocol");
}

std::size_t alice_codebook_size(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::Teleport3:
      return 64;
    default:
      return kListedFiveQubitOutcomes;  // 16 for both sharing protocols
  }
}

PostAlice post_alice_state(ProtocolKind kind, const PureState& input,
                           std::size_t alice_index) {
  const ProtocolShape& shape = shape_of(kind);
  PureState global = global_state(kind, input);
  MeasurementOutcome outcome =
      project_outcome(global, shape.alice_qubits, alice_basis(kind), alice_index);
  PostAlice out;
  out.probability = outcome.probability;
  out.state = std::move(outcome.collapsed);
  return out;
}

PostBob post_bob_state(ProtocolKind kind, const PureState& input,
                       std::size_t alice_index, std::size_t bob_index) {
  const ProtocolShape& shape = shape_of(kind);
  PostAlice after_alice = post_alice_state(kind, input, alice_index);
  PostBob out;
  if (!after_alice.state.has_value()) return out;
  if (kind == ProtocolKind::Teleport3) {
    out.conditional_probability = 1.0;
    out.state = std::move(after_alice.state);
    return out;
  }
  MeasurementOutcome outcome = project_outcome(
      *after_alice.state, shape.bob_relative, *bob_basis_of(kind), bob_index);
  out.conditional_probability = outcome.probability;
  out.state = std::move(outcome.collapsed);
  return out;
}

DensityMatrix charlie_state_given_alice(ProtocolKind kind, const PureState& input,
                                        std::size_t alice_index) {
  const ProtocolShape& shape = shape_of(kind);
  if (shape.charlie_relative.empty()) {
    throw std::invalid_argument(protocol_id(kind) + ": no Charlie party");
  }
  PostAlice after_alice = post_alice_state(kind, input, alice_index);
  if (!after_alice.state.has_value()) {
    throw std::invalid_argument("charlie_state_given_alice: unreachable outcome");
  }
  return partial_trace(*after_alice.state, shape.charlie_relative);
}

const CorrectionUnitary& derive_branch_correction(const std::string& protocol,
                                                  const std::string& alice_outcome,
                                                  const std::string& bob_outcome) {
  static std::map<std::string, CorrectionUnitary> cache;
  static std::mutex cache_mutex;

  BranchId branch{protocol, alice_outcome, bob_outcome};
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(branch.str());
  if (it != cache.end()) return it->second;

  ProtocolKind kind = protocol_from_id(protocol);
  const ProtocolShape& shape = shape_of(kind);
  std::size_t alice_index = alice_basis(kind).index_of(alice_outcome);
  std::size_t bob_index = 0;
  if (kind != ProtocolKind::Teleport3) {
    bob_index = bob_basis_of(kind)->index_of(bob_outcome);
  } else if (bob_outcome != "-") {
    throw std::invalid_argument("teleport3 has no Bob measurement outcome");
  }

  auto collapse_for_probe =
      [&](const PureState& probe) -> std::optional<PureState> {
    PostBob result = post_bob_state(kind, probe, alice_index, bob_index);
    double joint = result.conditional_probability;
    if (!result.state.has_value() || joint <= kZeroProb) return std::nullopt;
    return result.state;
  };

  CorrectionUnitary derived = derive_correction_from_probes(
      collapse_for_probe, shape.input_qubits, branch);
  auto [pos, inserted] = cache.emplace(branch.str(), std::move(derived));
  return pos->second;
}

namespace {

ProtocolTranscript run_branch(ProtocolKind kind, const PureState& input,
                              std::size_t alice_index, double alice_prob,
                              const PureState& after_alice,
                              std::optional<std::uint64_t> bob_sample_seed,
                              std::optional<std::size_t> forced_bob_index) {
  const ProtocolShape& shape = shape_of(kind);
  const OrthonormalBasis& a_basis = alice_basis(kind);

  ProtocolTranscript t{kind,          input, {}, std::nullopt, 0.0,
                       alice_prob, TranscriptStatus::Completed};
  t.events.push_back(MeasurementEvent{Party::Alice, shape.alice_qubits,
                                      a_basis.id, a_basis.labels[alice_index],
                                      alice_prob});

  bool unlisted = alice_index >= alice_codebook_size(kind);
  if (unlisted) {
    t.status = TranscriptStatus::UnlistedOutcome;
    t.fidelity = 0.0;
    return t;
  }

  t.events.push_back(ClassicalMessage{
      Party::Alice, shape.receiver,
      bits_string(alice_index, shape.alice_message_bits)});

  PureState receiver_state = after_alice;
  std::string bob_label = "-";
  if (kind != ProtocolKind::Teleport3) {
    const OrthonormalBasis& b_basis = *bob_basis_of(kind);
    MeasurementOutcome bob_outcome =
        forced_bob_index.has_value()
            ? project_outcome(after_alice, shape.bob_relative, b_basis,
                              *forced_bob_index)
            : measure_sample(after_alice, shape.bob_relative, b_basis,
                             *bob_sample_seed);
    bob_label = bob_outcome.label;
    t.probability *= bob_outcome.probability;
    t.events.push_back(MeasurementEvent{Party::Bob, shape.bob_qubits, b_basis.id,
                                        bob_outcome.label,
                                        bob_outcome.probability});
    t.events.push_back(ClassicalMessage{
        Party::Bob, shape.receiver,
        bits_string(bob_outcome.index, shape.bob_message_bits)});
    receiver_state = *bob_outcome.collapsed;
  }

  const CorrectionUnitary& correction = derive_branch_correction(
      protocol_id(kind), a_basis.labels[alice_index], bob_label);
  t.events.push_back(UnitaryEvent{shape.receiver, correction.branch});
  t.output = PureState(shape.input_qubits,
                       correction.matrix.apply(receiver_state.amps()));
  t.fidelity = fidelity(input, *t.output);
  return t;
}

ProtocolTranscript sample_run(ProtocolKind kind, const PureState& input,
                              std::uint64_t seed) {
  const ProtocolShape& shape = shape_of(kind);
  PureState global = global_state(kind, input);
  MeasurementOutcome alice_outcome = measure_sample(
      global, shape.alice_qubits, alice_basis(kind), sub_seed(seed, 0));
  if (!alice_outcome.collapsed.has_value()) {
    throw std::runtime_error("sample_run: sampled an unreachable outcome");
  }
  return run_branch(kind, input, alice_outcome.index, alice_outcome.probability,
                    *alice_outcome.collapsed,
                    sub_seed(seed, 1 + alice_outcome.index), std::nullopt);
}

std::vector<ProtocolTranscript> enumerate_runs(ProtocolKind kind,
                                               const PureState& input) {
  const ProtocolShape& shape = shape_of(kind);
  PureState global = global_state(kind, input);
  std::vector<MeasurementOutcome> alice_outcomes =
      measure_enumerate(global, shape.alice_qubits, alice_basis(kind));

  std::vector<ProtocolTranscript> out;
  for (const MeasurementOutcome& alice_outcome : alice_outcomes) {
    if (alice_outcome.probability <= kZeroProb) continue;
    bool unlisted = alice_outcome.index >= alice_codebook_size(kind);
    if (kind == ProtocolKind::Teleport3 || unlisted) {
      out.push_back(run_branch(kind, input, alice_outcome.index,
                               alice_outcome.probability,
                               *alice_outcome.collapsed, std::nullopt,
                               std::size_t{0}));
      continue;
    }
    const OrthonormalBasis& b_basis = *bob_basis_of(kind);
    for (std::size_t b = 0; b < b_basis.size(); ++b) {
      MeasurementOutcome probe = project_outcome(
          *alice_outcome.collapsed, shape.bob_relative, b_basis, b);
      if (probe.probability <= kZeroProb) continue;
      out.push_back(run_branch(kind, input, alice_outcome.index,
                               alice_outcome.probability,
                               *alice_outcome.collapsed, std::nullopt, b));
    }
  }
  return out;
}

}  // namespace

ProtocolTranscript teleport3_sample(const PureState& input, std::uint64_t seed) {
  return sample_run(ProtocolKind::Teleport3, input, seed);
}

std::vector<ProtocolTranscript> teleport3_enumerate(const PureState& input) {
  return enumerate_runs(ProtocolKind::Teleport3, input);
}

ProtocolTranscript qsts1_sample(const PureState& input, BobBasis bob_basis,
                                std::uint64_t seed) {
  return sample_run(bob_basis == BobBasis::Bell ? ProtocolKind::Qsts1Bell
                                                : ProtocolKind::Qsts1Computational,
                    input, seed);
}

std::vector<ProtocolTranscript> qsts1_enumerate(const PureState& input,
                                                BobBasis bob_basis) {
  return enumerate_runs(bob_basis == BobBasis::Bell
                            ? ProtocolKind::Qsts1Bell
                            : ProtocolKind::Qsts1Computational,
                        input);
}

ProtocolTranscript qsts2_sample(const PureState& input, QstsFamily family,
                                std::uint64_t seed) {
  return sample_run(family == QstsFamily::TableIV ? ProtocolKind::Qsts2TableIV
                                                  : ProtocolKind::Qsts2TableVI,
                    input, seed);
}

std::vector<ProtocolTranscript> qsts2_enumerate(const PureState& input,
                                                QstsFamily family) {
  return enumerate_runs(family == QstsFamily::TableIV
                            ? ProtocolKind::Qsts2TableIV
                            : ProtocolKind::Qsts2TableVI,
                        input);
}

bool causally_ordered(const ProtocolTranscript& t) {
  const ProtocolShape& shape = shape_of(t.kind);
  std::optional<std::string> alice_bits;
  std::optional<std::string> bob_bits;
  for (const TranscriptEvent& event : t.events) {
    if (const auto* msg = std::get_if<ClassicalMessage>(&event)) {
      if (msg->receiver != shape.receiver) return false;
      if (msg->sender == Party::Alice) alice_bits = msg->bits;
      if (msg->sender == Party::Bob) bob_bits = msg->bits;
      continue;
    }
    const auto* unitary = std::get_if<UnitaryEvent>(&event);
    if (unitary == nullptr) continue;
    if (unitary->party != shape.receiver) return false;
    // The branch id must be determined by previously delivered bits.
    if (!alice_bits.has_value()) return false;
    ProtocolKind kind = protocol_from_id(unitary->branch.protocol);
    if (kind != t.kind) return false;
    std::size_t alice_index = alice_basis(kind).index_of(unitary->branch.alice_outcome);
    if (alice_index != bits_value(*alice_bits)) return false;
    if (kind != ProtocolKind::Teleport3) {
      if (!bob_bits.has_value()) return false;
      std::size_t bob_index = bob_basis_of(kind)->index_of(unitary->branch.bob_outcome);
      if (bob_index != bits_value(*bob_bits)) return false;
    }
  }
  return true;
}

std::map<std::pair<Party, Party>, int> cbit_accounting(const ProtocolTranscript& t) {
  std::map<std::pair<Party, Party>, int> totals;
  for (const TranscriptEvent& event : t.events) {
    if (const auto* msg = std::get_if<ClassicalMessage>(&event)) {
      totals[{msg->sender, msg->receiver}] += static_cast<int>(msg->bits.size());
    }
  }
  return totals;
}

}  // namespace sixq
