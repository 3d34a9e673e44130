// report.hpp
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

#ifndef SUBMODAL_REPORT_HPP
#define SUBMODAL_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

namespace submodal {

enum class Verdict { Verified, Refuted, Exhausted };

std::string verdict_name(Verdict v);

/// Replayable evidence for a refuted claim: the model and formula in their
/// file syntax, plus a short note on what was observed.
struct Counterexample {
  std::string model;
  std::string formula;
  std::string witness;
};

/// Machine-readable result of one verification run. "Verified" always means
/// verified at the recorded bounds; the harness never claims more. The JSON
/// form is byte-reproducible for identical inputs, which is why the wall
/// clock stays out of it — runtime is reported on the human-readable side
/// only.
struct Report {
  std::string claim;
  int max_size = -1;         // N, when a size sweep was involved
  int extension_bound = -1;  // k, for extension searches
  int budget = -1;           // s, for budgeted candidate grammars
  Verdict verdict = Verdict::Verified;
  std::optional<Counterexample> counterexample;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  long long runtime_ms = 0;

  nlohmann::ordered_json to_json() const;
  std::string json_text() const;  // to_json() + newline
  std::string text() const;       // human-readable summary
  int exit_code() const;          // verified 0, refuted 1, exhausted 2
};

}  // namespace submodal

#endif  // SUBMODAL_REPORT_HPP
