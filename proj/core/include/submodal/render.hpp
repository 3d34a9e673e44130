// render.hpp
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

#ifndef SUBMODAL_RENDER_HPP
#define SUBMODAL_RENDER_HPP

#include <string>

#include "submodal/formula.hpp"
#include "submodal/model.hpp"
#include "submodal/signature.hpp"

namespace submodal {

// Deterministic textual forms: symbols in sorted order, single spaces,
// formulas on one line. parse(render(x)) == x for every well-formed value.

std::string render_term(const Term& t);
std::string render_formula(const Formula& f);
std::string render_signature(const Signature& sig);
std::string render_model(const FiniteModel& m);

}  // namespace submodal

#endif  // SUBMODAL_RENDER_HPP
