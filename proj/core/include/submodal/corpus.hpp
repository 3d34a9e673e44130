// corpus.hpp
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

#ifndef SUBMODAL_CORPUS_HPP
#define SUBMODAL_CORPUS_HPP

#include <string>
#include <vector>

#include "submodal/formula.hpp"
#include "submodal/signature.hpp"

namespace submodal::corpus {

// Fixed sentence collections shared by the demos, the verification harness,
// and the test suites. Everything here is built once on first use and then
// reused; formulas are written in the .fml surface syntax so the corpus also
// exercises the parser.

struct NamedSentence {
  std::string name;
  std::string sig;  // key for signature()
  Formula formula;
};

/// Registry keys: "P" (P/1), "PQ" (P/1 Q/1), "R" (R/2), "RP" (R/2 P/1),
/// "ord" (</2), "ord_eq" (</2 with equality), "fP" (f/1 P/1),
/// "groupoid" (mul/2 with equality), "group" (mul/2, e, with equality).
const Signature& signature(const std::string& key);

/// Twenty sentences over relational signatures with at most two predicates;
/// the theta-builder soundness sweep runs over these.
const std::vector<NamedSentence>& builder_corpus();

/// Purely monadic, equality-free sentences (P/1 and P/1 Q/1).
const std::vector<NamedSentence>& monadic_corpus();

/// Combinations of prenex exists-forall sentences, relational and with one
/// unary function, for the witness-bound sweeps.
const std::vector<NamedSentence>& ea_corpus();

/// Two binary-plus-unary-predicate sentences for preservation tests at
/// small sizes.
const std::vector<NamedSentence>& rp_corpus();

// Order theory, over "ord" / "ord_eq".
Formula no_minimal();             // every element has a smaller one
Formula no_maximal();             // every element has a bigger one
Formula density_sentence();       // dense linear order with two points
Formula strict_order_axioms();    // irreflexive and transitive
Formula linear_order_axioms();    // strict + totality (needs equality)
Formula order_endpoint_escape();  // linear order -> no first or no last
Formula min_size_if_linear(int n);  // linear order -> at least n elements

// Algebra, over "groupoid" / "group".
Formula cancellation_left(), cancellation_right();
Formula solvability_left(), solvability_right();
Formula associativity_group(), commutativity_group();
Formula quasigroup_axioms();  // cancellation + solvability, over "groupoid"
Formula group_axioms();       // associativity + cancellation + invertibility
Formula abelian_axioms();     // group_axioms + commutativity

/// Quasi-identities every subgroupoid of a group satisfies: both
/// cancellation laws and a four-equation transfer law.
const std::vector<NamedSentence>& group_embeddability_quasi_identities();

/// (phi, psi, fragment bound n, existential width k) with
/// "fragment of T_phi up to n" entailing phi <-> psi on finite models, and
/// every phi-model owning a phi-submodel with at most max(k, n) elements.
struct SyntacticCriterionPair {
  std::string name;
  std::string sig;
  Formula phi;
  Formula psi;
  int fragment_n;
  int exists_width;
};
const std::vector<SyntacticCriterionPair>& syntactic_criterion_pairs();

}  // namespace submodal::corpus

#endif  // SUBMODAL_CORPUS_HPP
