// modal.hpp
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

#ifndef SUBMODAL_MODAL_HPP
#define SUBMODAL_MODAL_HPP

#include "submodal/formula.hpp"
#include "submodal/model.hpp"

namespace submodal {

// Satisfiability in submodels. A submodel is the induced structure on a
// nonempty subset closed under functions and constants; the whole model
// counts as its own submodel. All operators take sentences.

/// Some submodel satisfies phi.
bool theta_sem(const FiniteModel& m, const Formula& phi);

/// Some submodel with at most n elements satisfies phi (n >= 1).
bool theta_le_sem(const FiniteModel& m, const Formula& phi, int n);

/// Some submodel with exactly n elements satisfies phi (n >= 1).
bool theta_eq_sem(const FiniteModel& m, const Formula& phi, int n);

/// Some submodel generated by at most n elements satisfies phi (n >= 1).
bool theta_gen_sem(const FiniteModel& m, const Formula& phi, int n);

/// Some extension of `m` with at most k elements satisfies phi (k >= |A|).
/// Extension satisfiability has no unbounded decision procedure here; the
/// bound is part of the answer, never implicit.
bool theta_star_sem(const FiniteModel& m, const Formula& phi, int k);

}  // namespace submodal

#endif  // SUBMODAL_MODAL_HPP
