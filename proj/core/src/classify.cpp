// classify.cpp
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

#include "submodal/classify.hpp"

namespace submodal {

namespace {

bool open(const Formula& f) {
  if (f.is_quantifier()) return false;
  for (const auto& c : f.children())
    if (!open(c)) return false;
  return true;
}

bool prenex_exists(const Formula& f) {
  const Formula* cur = &f;
  while (cur->kind() == FormulaKind::Exists) cur = &cur->child();
  return open(*cur);
}

bool prenex_forall(const Formula& f) {
  const Formula* cur = &f;
  while (cur->kind() == FormulaKind::Forall) cur = &cur->child();
  return open(*cur);
}

// Exists-blocks, then Forall-blocks, then an open matrix. Returns the summed
// width of the leading existential blocks through `width`.
bool sigma2(const Formula& f, int& width) {
  const Formula* cur = &f;
  width = 0;
  while (cur->kind() == FormulaKind::Exists) {
    width += static_cast<int>(cur->vars().size());
    cur = &cur->child();
  }
  return prenex_forall(*cur);
}

bool ea_combination(const Formula& f) {
  if (f.kind() == FormulaKind::And || f.kind() == FormulaKind::Or) {
    for (const auto& c : f.children())
      if (!ea_combination(c)) return false;
    return true;
  }
  int w = 0;
  return sigma2(f, w);
}

void scan_atoms(const Formula& f, bool& monadic_like, bool& equality) {
  if (f.is_atom()) {
    if (f.kind() == FormulaKind::EqAtom) equality = true;
    std::set<std::string> vs;
    for (const auto& t : f.terms()) {
      auto tv = term_vars(t);
      vs.insert(tv.begin(), tv.end());
    }
    if (vs.size() > 1) monadic_like = false;
    return;
  }
  for (const auto& c : f.children()) scan_atoms(c, monadic_like, equality);
}

}  // namespace

Classification classify(const Formula& f) {
  Classification c;
  c.is_open = open(f);
  c.is_existential = prenex_exists(f);
  c.is_universal = prenex_forall(f);
  c.is_sigma2 = sigma2(f, c.existential_width);
  if (!c.is_sigma2) c.existential_width = 0;
  c.is_ea_combination = ea_combination(f);
  c.is_monadic_like = true;
  scan_atoms(f, c.is_monadic_like, c.uses_equality);
  return c;
}

}  // namespace submodal
