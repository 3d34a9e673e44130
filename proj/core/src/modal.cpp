// modal.cpp
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

#include "submodal/modal.hpp"

#include <bit>
#include <set>
#include <stdexcept>

#include "submodal/compiled.hpp"
#include "submodal/enumerate.hpp"

namespace submodal {

namespace {
void require_sentence(const Formula& phi) {
  if (!is_sentence(phi))
    throw std::invalid_argument("theta operators take sentences; free variable " +
                                *free_vars(phi).begin());
}
}  // namespace

bool theta_sem(const FiniteModel& m, const Formula& phi) {
  require_sentence(phi);
  CompiledFormula cf(phi, m.signature());
  bool found = false;
  for_each_subuniverse(m, [&](std::uint64_t mask) {
    if (cf.eval_closed_on(m, mask)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

bool theta_le_sem(const FiniteModel& m, const Formula& phi, int n) {
  require_sentence(phi);
  if (n < 1) throw std::invalid_argument("submodel size bound must be >= 1");
  CompiledFormula cf(phi, m.signature());
  bool found = false;
  for_each_subuniverse(m, [&](std::uint64_t mask) {
    if (std::popcount(mask) > n) return true;
    if (cf.eval_closed_on(m, mask)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

bool theta_eq_sem(const FiniteModel& m, const Formula& phi, int n) {
  require_sentence(phi);
  if (n < 1) throw std::invalid_argument("submodel size bound must be >= 1");
  CompiledFormula cf(phi, m.signature());
  bool found = false;
  for_each_subuniverse(m, [&](std::uint64_t mask) {
    if (std::popcount(mask) != n) return true;
    if (cf.eval_closed_on(m, mask)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

bool theta_gen_sem(const FiniteModel& m, const Formula& phi, int n) {
  require_sentence(phi);
  if (n < 1) throw std::invalid_argument("generator bound must be >= 1");
  CompiledFormula cf(phi, m.signature());
  // Distinct seed sets can generate the same subuniverse; evaluate each
  // closure once.
  std::set<std::uint64_t> seen;
  std::uint64_t full = m.full_domain();
  for (std::uint64_t seeds = 1; seeds <= full; ++seeds) {
    if (std::popcount(seeds) > n) continue;
    std::vector<int> seed_list;
    for (int e = 0; e < m.size(); ++e)
      if (seeds >> e & 1) seed_list.push_back(e);
    std::uint64_t closure = generated_closure(m, seed_list);
    if (!seen.insert(closure).second) continue;
    if (cf.eval_closed_on(m, closure)) return true;
  }
  return false;
}

bool theta_star_sem(const FiniteModel& m, const Formula& phi, int k) {
  require_sentence(phi);
  if (k < m.size())
    throw std::invalid_argument("extension bound below the model size");
  return exists_extension_satisfying(m, k, phi);
}

}  // namespace submodal
