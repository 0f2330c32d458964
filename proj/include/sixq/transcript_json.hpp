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

#ifndef SIXQ_TRANSCRIPT_JSON_HPP
#define SIXQ_TRANSCRIPT_JSON_HPP

#include <json.hpp>

#include "sixq/protocols.hpp"

namespace sixq {

/// Schema: see docs/transcript-schema.md.
nlohmann::ordered_json transcript_to_json(const ProtocolTranscript& t);

nlohmann::ordered_json state_to_json(const PureState& s);

}  // namespace sixq

#endif  // SIXQ_TRANSCRIPT_JSON_HPP
