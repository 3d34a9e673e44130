// report.cpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "submodal/report.hpp"

#include <sstream>

namespace submodal {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Verified:
      return "verified";
    case Verdict::Refuted:
      return "refuted";
    case Verdict::Exhausted:
      return "exhausted-without-decision";
  }
  return "unknown";
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["claim"] = claim;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  if (max_size >= 0) params["max_size"] = max_size;
  if (extension_bound >= 0) params["extension_bound"] = extension_bound;
  if (budget >= 0) params["budget"] = budget;
  j["parameters"] = params;
  j["verdict"] = verdict_name(verdict);
  if (counterexample) {
    nlohmann::ordered_json c;
    c["model"] = counterexample->model;
    c["formula"] = counterexample->formula;
    c["witness"] = counterexample->witness;
    j["counterexample"] = c;
  } else {
    j["counterexample"] = nullptr;
  }
  j["details"] = details;
  return j;
}

std::string Report::json_text() const { return to_json().dump(2) + "\n"; }

std::string Report::text() const {
  std::ostringstream out;
  out << verdict_name(verdict) << ": " << claim;
  if (max_size >= 0) out << " [max_size=" << max_size << "]";
  if (extension_bound >= 0) out << " [extension_bound=" << extension_bound << "]";
  if (budget >= 0) out << " [budget=" << budget << "]";
  out << " (" << runtime_ms << " ms)\n";
  if (counterexample) {
    out << "counterexample formula: " << counterexample->formula << "\n";
    if (!counterexample->model.empty())
      out << "counterexample model:\n" << counterexample->model;
    if (!counterexample->witness.empty())
      out << "witness: " << counterexample->witness << "\n";
  }
  if (!details.empty()) out << "details: " << details.dump() << "\n";
  return out.str();
}

int Report::exit_code() const {
  switch (verdict) {
    case Verdict::Verified:
      return 0;
    case Verdict::Refuted:
      return 1;
    case Verdict::Exhausted:
      return 2;
  }
  return 3;
}

}  // namespace submodal
