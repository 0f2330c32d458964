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

#include "sixq/transcript_json.hpp"

namespace sixq {

using nlohmann::ordered_json;

ordered_json state_to_json(const PureState& s) {
  ordered_json amps = ordered_json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    amps.push_back({s.amp(i).real(), s.amp(i).imag()});
  }
  return ordered_json{{"n_qubits", s.n_qubits()}, {"amplitudes", amps}};
}

ordered_json transcript_to_json(const ProtocolTranscript& t) {
  ordered_json events = ordered_json::array();
  for (const TranscriptEvent& event : t.events) {
    if (const auto* m = std::get_if<MeasurementEvent>(&event)) {
      events.push_back(ordered_json{{"type", "measurement"},
                                    {"party", party_name(m->party)},
                                    {"qubits", m->qubits},
                                    {"basis", m->basis_id},
                                    {"outcome", m->outcome},
                                    {"probability", m->probability}});
    } else if (const auto* msg = std::get_if<ClassicalMessage>(&event)) {
      events.push_back(ordered_json{{"type", "message"},
                                    {"from", party_name(msg->sender)},
                                    {"to", party_name(msg->receiver)},
                                    {"bits", msg->bits}});
    } else if (const auto* u = std::get_if<UnitaryEvent>(&event)) {
      events.push_back(ordered_json{{"type", "unitary"},
                                    {"party", party_name(u->party)},
                                    {"branch", u->branch.str()}});
    }
  }
  ordered_json out{
      {"protocol", protocol_id(t.kind)},
      {"status", t.status == TranscriptStatus::Completed ? "completed"
                                                         : "unlisted-outcome"},
      {"input", state_to_json(t.input)},
      {"events", std::move(events)},
      {"output", t.output.has_value() ? state_to_json(*t.output)
                                      : ordered_json(nullptr)},
      {"fidelity", t.fidelity},
      {"probability", t.probability},
  };
  return out;
}

}  // namespace sixq
