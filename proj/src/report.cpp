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

#include "sixq/report.hpp"

#include <chrono>
#include <cstdio>

namespace sixq {

using nlohmann::ordered_json;

void Report::add_check(const std::string& name, bool pass, double measured,
                       double tolerance, const std::string& detail) {
  ordered_json check{{"name", name},
                     {"pass", pass},
                     {"measured", measured},
                     {"tolerance", tolerance}};
  if (!detail.empty()) check["detail"] = detail;
  checks_.push_back(std::move(check));
  if (!pass) ++failures_;
}

void Report::add_finding(const std::string& id, const std::string& note,
                         std::optional<double> measured) {
  ordered_json finding{{"id", id}, {"note", note}};
  if (measured.has_value()) finding["measured"] = *measured;
  findings_.push_back(std::move(finding));
}

void Report::add_section(const std::string& key, ordered_json value) {
  sections_[key] = std::move(value);
}

ordered_json Report::to_json(bool include_timestamp) const {
  ordered_json out;
  out["command"] = command_;
  out["config"] = config_;
  out["checks"] = checks_;
  out["findings"] = findings_;
  for (const auto& [key, value] : sections_.items()) {
    out[key] = value;
  }
  out["pass"] = all_passed();
  if (include_timestamp) {
    auto now = std::chrono::system_clock::now().time_since_epoch();
    out["timestamp_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(now).count();
  }
  return out;
}

std::string Report::quiet_text() const {
  std::string out;
  char buf[160];
  for (const auto& check : checks_) {
    std::snprintf(buf, sizeof(buf), "%s %s measured=%.17g tol=%.17g\n",
                  check["pass"].get<bool>() ? "PASS" : "FAIL",
                  check["name"].get<std::string>().c_str(),
                  check["measured"].get<double>(),
                  check["tolerance"].get<double>());
    out += buf;
  }
  for (const auto& finding : findings_) {
    out += "NOTE " + finding["id"].get<std::string>();
    if (finding.contains("measured")) {
      std::snprintf(buf, sizeof(buf), " measured=%.17g",
                    finding["measured"].get<double>());
      out += buf;
    }
    out += "\n";
  }
  return out;
}

}  // namespace sixq
