// formula.hpp
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

#ifndef SUBMODAL_FORMULA_HPP
#define SUBMODAL_FORMULA_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "submodal/signature.hpp"

namespace submodal {

enum class TermKind : unsigned char { Variable, Constant, Apply };

/// Immutable term tree. Copies share structure; safe to hand across threads.
class Term {
 public:
  static Term variable(std::string name);
  static Term constant(std::string name);
  static Term apply(std::string function, std::vector<Term> args);

  TermKind kind() const { return node_->kind; }
  const std::string& symbol() const { return node_->symbol; }
  const std::vector<Term>& args() const { return node_->args; }

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

 private:
  struct Node {
    TermKind kind;
    std::string symbol;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

enum class FormulaKind : unsigned char {
  PredAtom,
  EqAtom,
  Not,
  And,
  Or,
  Exists,
  Forall,
};

/// Immutable formula tree with n-ary conjunction/disjunction and
/// multi-variable quantifier blocks. The empty conjunction is the canonical
/// truth and the empty disjunction the canonical falsehood; quantifier
/// blocks are nonempty with pairwise-distinct variables (enforced on
/// construction). Blocks are first-class, not sugar for nested single
/// quantifiers; see flatten() for the comparison normalizer.
class Formula {
 public:
  static Formula pred(std::string name, std::vector<Term> terms);
  static Formula eq(Term lhs, Term rhs);
  static Formula negation(Formula f);
  static Formula conj(std::vector<Formula> fs);
  static Formula disj(std::vector<Formula> fs);
  static Formula exists(std::vector<std::string> vars, Formula body);
  static Formula forall(std::vector<std::string> vars, Formula body);

  static Formula top() { return conj({}); }
  static Formula bottom() { return disj({}); }

  FormulaKind kind() const { return node_->kind; }
  const std::string& symbol() const { return node_->symbol; }
  const std::vector<Term>& terms() const { return node_->terms; }
  const std::vector<Formula>& children() const { return node_->children; }
  const std::vector<std::string>& vars() const { return node_->vars; }

  const Formula& child() const { return node_->children.front(); }

  bool is_quantifier() const {
    return kind() == FormulaKind::Exists || kind() == FormulaKind::Forall;
  }
  bool is_atom() const {
    return kind() == FormulaKind::PredAtom || kind() == FormulaKind::EqAtom;
  }

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  struct Node {
    FormulaKind kind;
    std::string symbol;
    std::vector<Term> terms;
    std::vector<Formula> children;
    std::vector<std::string> vars;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Node n);
  std::shared_ptr<const Node> node_;
};

std::set<std::string> term_vars(const Term& t);

/// Variables with a free occurrence, in sorted order.
std::set<std::string> free_vars(const Formula& f);

/// Free and bound variables together.
std::set<std::string> all_vars(const Formula& f);

bool is_sentence(const Formula& f);

/// First name not in `used`: base, then base', base'', ...
/// Deterministic, so builder output is reproducible byte for byte.
std::string fresh_name(const std::string& base, const std::set<std::string>& used);

Term substitute_term(const Term& t, const std::map<std::string, Term>& subst);

/// Capture-avoiding substitution of free occurrences. Bound variables are
/// renamed (prime suffixes) when a replacement term would otherwise be
/// captured.
Formula substitute(const Formula& f, const std::map<std::string, Term>& subst);

/// As above, but first validates every replacement term against `sig`
/// (declared symbols, arity match).
Formula substitute(const Formula& f, const std::map<std::string, Term>& subst,
                   const Signature& sig);

/// Equality up to renaming of bound variables.
bool alpha_equivalent(const Formula& a, const Formula& b);

/// Renames bound variables so that none of them appears in `avoid`.
Formula rename_bound_away(const Formula& f, const std::set<std::string>& avoid);

/// Comparison normalizer: merges nested And into And, Or into Or, and
/// adjacent same-kind quantifier blocks (when no name is shadowed).
Formula flatten(const Formula& f);

void validate_term(const Term& t, const Signature& sig);

/// Checks symbols, arities, and the equality gate: EqAtom is rejected when
/// the signature has equality_allowed = false. Throws std::invalid_argument.
void validate_formula(const Formula& f, const Signature& sig);

}  // namespace submodal

#endif  // SUBMODAL_FORMULA_HPP
