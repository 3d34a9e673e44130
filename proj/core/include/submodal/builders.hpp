// builders.hpp
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

#ifndef SUBMODAL_BUILDERS_HPP
#define SUBMODAL_BUILDERS_HPP

#include <string>
#include <vector>

#include "submodal/formula.hpp"
#include "submodal/signature.hpp"

namespace submodal {

/// A finite set of sentences over one signature.
struct Theory {
  std::vector<Formula> sentences;
};

/// The builders' variable names x0..x_{n-1}.
std::vector<std::string> builder_vars(int n);

/// Relativization of phi to the variables X, clause by clause: atoms are
/// untouched, negation and the connectives commute, and every quantified
/// variable acquires a membership disjunction over X (for universal blocks,
/// dually, a negated membership guard). Bound variables of phi clashing
/// with X are renamed first; a free variable of phi inside X is an error.
/// The output may contain equality atoms even over an equality-free
/// signature: it lives in tau extended with equality.
Formula relativize(const Formula& phi, const std::vector<std::string>& X);

/// The formula (free in x0..x_{n-1}) asserting that {x0..x_{n-1}} carries a
/// submodel: for every function or constant symbol and every argument tuple
/// over the x's, the value equals some x. The empty conjunction when the
/// signature is relational.
Formula submodel_formula(const Signature& tau, int n);

/// The sentence equivalent to "some submodel with at most n elements
/// satisfies phi": exists x0..x_{n-1} (submodel_formula /\ relativized phi).
/// Over tau.with_equality().
Formula build_theta_le(const Formula& phi, const Signature& tau, int n);

/// The exact-cardinality variant: conjoins pairwise distinctness of the x's.
Formula build_theta_eq(const Formula& phi, const Signature& tau, int n);

/// The universal theory fragment { not theta_le(phi, n) : 1 <= n <= N },
/// asserting that no submodel of size <= N satisfies phi. Members are
/// emitted in genuinely universal form: the relativized quantifiers are
/// expanded into substitution instances before the negation is pushed
/// inward, so each member classifies as a universal sentence. Requires a
/// relational signature.
Theory build_t_phi(const Formula& phi, const Signature& tau, int N);

}  // namespace submodal

#endif  // SUBMODAL_BUILDERS_HPP
