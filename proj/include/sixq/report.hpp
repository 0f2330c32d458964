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

#ifndef SIXQ_REPORT_HPP
#define SIXQ_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

namespace sixq {

/// Machine-readable result document emitted by every CLI command: a config
/// echo, named pass/fail checks, and informational findings. The overall
/// exit status is fail iff any check fails.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void set_config(nlohmann::ordered_json config) { config_ = std::move(config); }

  void add_check(const std::string& name, bool pass, double measured,
                 double tolerance, const std::string& detail = "");

  /// Records a measured property that is reported but not scored, e.g. a
  /// documented deviation of the reference tables.
  void add_finding(const std::string& id, const std::string& note,
                   std::optional<double> measured = std::nullopt);

  void add_section(const std::string& key, nlohmann::ordered_json value);

  bool all_passed() const { return failures_ == 0; }
  int failures() const { return failures_; }

  nlohmann::ordered_json to_json(bool include_timestamp) const;

  /// One line per check (and per finding), no JSON.
  std::string quiet_text() const;

 private:
  std::string command_;
  nlohmann::ordered_json config_ = nlohmann::ordered_json::object();
  nlohmann::ordered_json checks_ = nlohmann::ordered_json::array();
  nlohmann::ordered_json findings_ = nlohmann::ordered_json::array();
  nlohmann::ordered_json sections_ = nlohmann::ordered_json::object();
  int failures_ = 0;
};

}  // namespace sixq

#endif  // SIXQ_REPORT_HPP
