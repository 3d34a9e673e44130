// verify.hpp
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

#ifndef SUBMODAL_VERIFY_HPP
#define SUBMODAL_VERIFY_HPP

#include <string>
#include <vector>

#include "submodal/builders.hpp"
#include "submodal/formula.hpp"
#include "submodal/model.hpp"
#include "submodal/report.hpp"
#include "submodal/signature.hpp"

namespace submodal {

/// Do the two sentences agree on every model of tau with at most max_size
/// elements? Refuted reports carry the least counterexample (smallest size,
/// then slot-lexicographic table order). The model space is partitioned
/// across `jobs` workers; the result does not depend on the job count.
Report check_equiv(const Formula& a, const Formula& b, const Signature& tau,
                   int max_size, int jobs = 1);

/// Empirical witness bound: the least k such that every model of phi with
/// size <= max_size has a submodel of size <= k satisfying phi. Exhausted
/// when some boundary-size model has no proper witness, i.e. the bound is
/// still growing at the horizon. The bound lands in details["bound"].
Report witness_bound_scan(const Formula& phi, const Signature& tau,
                          int max_size);

struct SieveResult {
  Theory theory;
  Report report;
};

/// The universal sentences within the syntactic budget that hold in every
/// model of phi of size <= max_size: a sound-at-scale approximation of the
/// universal-consequence theory of phi. Candidates are universal clauses
/// with at most `budget` quantified variables and at most `budget` literals
/// over depth-one terms, canonicalized (variables in first-occurrence
/// order, sorted deduplicated literals, no complementary pair, reflexive
/// equations only as singletons). Every retained sentence is re-checked
/// against the collected models before it is reported.
SieveResult universal_consequence_sieve(const Formula& phi,
                                        const Signature& tau, int budget,
                                        int max_size, int jobs = 1);

/// Cross-checks the bounded extension search against the sieve: a positive
/// theta-star forces every retained universal consequence to hold (exact
/// direction); the converse is evidence only, reported as exhausted when
/// the bounded search finds nothing but no sieve member fails either.
Report theta_star_membership(const FiniteModel& m, const Formula& phi, int k,
                             int budget, int max_size);

/// Scripted finite-scale verifications: maltsev, quasigroup, abelian,
/// wellfounded, density, theorem1.
Report demo(const std::string& name);
std::vector<std::string> demo_names();

}  // namespace submodal

#endif  // SUBMODAL_VERIFY_HPP
