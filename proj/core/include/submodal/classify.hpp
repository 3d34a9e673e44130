// classify.hpp
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

#ifndef SUBMODAL_CLASSIFY_HPP
#define SUBMODAL_CLASSIFY_HPP

#include "submodal/formula.hpp"

namespace submodal {

/// Syntactic class record, read off the given tree (no normalization is
/// applied first; run nnf yourself if you want the classes of the normal
/// form). `is_open` implies both `is_existential` and `is_universal`
/// (vacuous prefixes), and `is_sigma2` implies `is_ea_combination`
/// (a one-leaf combination).
struct Classification {
  bool is_open = false;
  bool is_existential = false;   // prenex Exists-blocks over an open matrix
  bool is_universal = false;     // prenex Forall-blocks over an open matrix
  bool is_sigma2 = false;        // Exists-blocks, then Forall-blocks, then open
  bool is_ea_combination = false;  // And/Or tree whose leaves are sigma2-shaped
  bool is_monadic_like = false;  // every atom has at most one distinct variable
  bool uses_equality = false;
  // Total length of the leading existential blocks when is_sigma2.
  int existential_width = 0;
};

Classification classify(const Formula& f);

}  // namespace submodal

#endif  // SUBMODAL_CLASSIFY_HPP
