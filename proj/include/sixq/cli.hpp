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

#ifndef SIXQ_CLI_HPP
#define SIXQ_CLI_HPP

#include <iosfwd>

namespace sixq {

/// Runs one CLI invocation. Exit codes: 0 all checks passed, 1 a check
/// failed, 2 usage error.
int cli_run(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace sixq

#endif  // SIXQ_CLI_HPP
