// transforms.hpp
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

#ifndef SUBMODAL_TRANSFORMS_HPP
#define SUBMODAL_TRANSFORMS_HPP

#include <string>
#include <vector>

#include "submodal/classify.hpp"
#include "submodal/formula.hpp"
#include "submodal/signature.hpp"

namespace submodal {

// Every transform here preserves satisfaction on finite models; the test
// suites check that exhaustively at small sizes. Each rewrite strictly
// shrinks (quantifier nesting depth, node count) lexicographically, so the
// pipelines terminate.

/// Negation normal form: negations pushed down to atoms, connectives and
/// quantifier blocks dualized on the way.
Formula nnf(const Formula& f);

/// Structural cleanup: flattens nested And/Or, folds the empty conjunction
/// and disjunction through connectives, collapses double negation and
/// one-element And/Or, rewrites t = t to truth, and drops quantified
/// variables with no occurrence (sound because universes are nonempty).
Formula simplify(const Formula& f);

/// Max over disjunct selections of the summed existential-block widths of
/// the selected prenex exists-forall components of nnf(f), adjusted to at
/// least 1 (a one-element generated submodel always exists). A model of f
/// has a submodel generated by this many elements that still satisfies f;
/// over a relational signature, a submodel of this cardinality.
int ea_witness_bound(const Formula& f);

/// The raw per-disjunct sums for the top-level disjunction of nnf(f)
/// (a single entry when the root is not a disjunction). Diagnostics only.
std::vector<int> ea_disjunct_bounds(const Formula& f);

/// Normal form for monadic-like formulas (every atom carries at most one
/// variable): a Not/And/Or combination of one-variable existential
/// sentences and open one-variable pieces. No quantifier nests another,
/// every block has exactly one variable, and universal facts surface as
/// negated existentials (the canonical polarity).
Formula normalize_monadic(const Formula& f);

/// True when f already has the shape normalize_monadic guarantees.
bool monadic_normal_shape(const Formula& f);

/// Rewrites a one-variable quantifier over an open body into the
/// disjunction (existential) or conjunction (universal) of substitution
/// instances over X. The singleton collapse keeps one-element index sets
/// tidy: (forall (y) (P y)) over (x0) becomes (P x0).
Formula relativize_one_param(const Formula& quantified,
                             const std::vector<std::string>& X);

/// Relativization in open form: like relativize(), but every quantifier is
/// expanded into its substitution instances over X instead of acquiring a
/// membership guard. The result is open (in X) and equality-free whenever
/// phi is.
Formula relativize_open(const Formula& phi, const std::vector<std::string>& X);

/// Removes the equality atoms a relativization introduced over a purely
/// monadic signature: membership-guarded one-variable blocks become
/// substitution instances, vacuous guards are dropped. Equality anywhere
/// else is an error; in particular the distinctness clause of the
/// exact-cardinality builder cannot be eliminated and is reported as such.
Formula eliminate_equality_monadic(const Formula& f);

/// The closed-form theta sentence for a purely monadic equality-free
/// signature: an equality-free sentence chi over tau with
/// evaluate(A, chi) == theta_sem(A, phi) on every finite model. Pipeline:
/// normalize, take the witness bound, relativize to that many variables,
/// eliminate the equality guards, normalize again.
Formula build_theta_monadic(const Formula& phi, const Signature& tau);

}  // namespace submodal

#endif  // SUBMODAL_TRANSFORMS_HPP
