// test_logic_core.cpp
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

#include <doctest.h>

#include <functional>
#include <random>

#include "submodal/classify.hpp"
#include "submodal/corpus.hpp"
#include "submodal/formula.hpp"
#include "submodal/parse.hpp"
#include "submodal/render.hpp"

using namespace submodal;

namespace {

Formula parse_pq(const std::string& text) {
  return parse_formula(text, corpus::signature("PQ"));
}

Formula parse_r(const std::string& text) {
  return parse_formula(text, corpus::signature("R"));
}

}  // namespace

TEST_CASE("signature invariants") {
  Signature s;
  s.add_predicate("P", 1).add_function("f", 2).add_constant("c");
  CHECK_THROWS_AS(s.add_predicate("P", 1), std::invalid_argument);
  CHECK_THROWS_AS(s.add_function("P", 1), std::invalid_argument);
  CHECK_THROWS_AS(s.add_constant("f"), std::invalid_argument);
  CHECK_THROWS_AS(s.add_predicate("Q", 0), std::invalid_argument);
  CHECK(s.fnc_size() == 2);
  CHECK_FALSE(s.purely_monadic());
  CHECK(corpus::signature("PQ").purely_monadic());
  CHECK_FALSE(corpus::signature("R").purely_monadic());
  CHECK(corpus::signature("R").relational());
}

TEST_CASE("free variables") {
  CHECK(free_vars(parse_pq("(P x)")) == std::set<std::string>{"x"});
  CHECK(free_vars(parse_pq("(exists (x) (P x))")).empty());
  CHECK(free_vars(parse_pq("(exists (x) (and (P x) (Q y)))")) ==
        std::set<std::string>{"y"});
  CHECK(is_sentence(parse_pq("(forall (x) (P x))")));
}

TEST_CASE("quantifier blocks are nonempty with distinct variables") {
  CHECK_THROWS_AS(Formula::exists({}, Formula::top()), std::invalid_argument);
  CHECK_THROWS_AS(Formula::exists({"x", "x"}, Formula::top()),
                  std::invalid_argument);
}

TEST_CASE("substitution") {
  Signature sig = Signature().add_predicate("P", 1).add_constant("c");
  Formula f = parse_formula("(P x)", sig);
  Formula g = substitute(f, {{"x", Term::constant("c")}});
  CHECK(render_formula(g) == "(P c)");

  Formula closed = parse_formula("(exists (x) (P x))", sig);
  CHECK(substitute(closed, {{"x", Term::constant("c")}}) == closed);

  // capture avoidance: y -> x under a binder for x
  Formula r = parse_r("(exists (x) (R x y))");
  Formula renamed = substitute(r, {{"y", Term::variable("x")}});
  CHECK(free_vars(renamed) == std::set<std::string>{"x"});
  CHECK(alpha_equivalent(renamed, parse_r("(exists (z) (R z x))")));
  CHECK_FALSE(alpha_equivalent(renamed, parse_r("(exists (z) (R z z))")));

  // arity checking through the validating overload
  Signature fsig = Signature().add_predicate("P", 1).add_function("f", 2);
  CHECK_THROWS_AS(
      substitute(parse_formula("(P x)", fsig),
                 {{"x", Term::apply("f", {Term::variable("y")})}}, fsig),
      std::invalid_argument);
}

TEST_CASE("substitution round-trip under injective renaming") {
  std::vector<Formula> corpus_formulas;
  for (const auto& s : corpus::builder_corpus())
    corpus_formulas.push_back(s.formula);
  for (const auto& f : corpus_formulas) {
    Formula fwd = substitute(f, {{"x", Term::variable("u")},
                                 {"y", Term::variable("v")}});
    Formula back = substitute(fwd, {{"u", Term::variable("x")},
                                    {"v", Term::variable("y")}});
    CHECK(alpha_equivalent(f, back));
  }
}

TEST_CASE("alpha equivalence") {
  CHECK(alpha_equivalent(parse_pq("(exists (x) (P x))"),
                         parse_pq("(exists (y) (P y))")));
  CHECK_FALSE(alpha_equivalent(parse_pq("(exists (x) (P x))"),
                               parse_pq("(exists (y) (Q y))")));
  CHECK_FALSE(alpha_equivalent(parse_pq("(exists (x) (and (P x) (Q y)))"),
                               parse_pq("(exists (y) (and (P y) (Q y)))")));
  CHECK(alpha_equivalent(
      parse_r("(forall (x y) (or (not (R x y)) (R y x)))"),
      parse_r("(forall (u v) (or (not (R u v)) (R v u)))")));
}

TEST_CASE("flatten merges connectives and blocks") {
  Formula nested = parse_pq("(and (and (P x) (Q x)) (P y))");
  Formula flat = flatten(nested);
  CHECK(flat.kind() == FormulaKind::And);
  CHECK(flat.children().size() == 3);

  Formula blocks = parse_pq("(exists (x) (exists (y) (and (P x) (Q y))))");
  Formula merged = flatten(blocks);
  CHECK(merged.kind() == FormulaKind::Exists);
  CHECK(merged.vars().size() == 2);

  // shadowed name is not merged into one block
  Formula shadow = parse_pq("(exists (x) (exists (x) (P x)))");
  CHECK(flatten(shadow).vars().size() == 1);
}

TEST_CASE("classification shapes") {
  Classification c = classify(parse_r("(exists (x y) (forall (z) (R x y)))"));
  CHECK(c.is_sigma2);
  CHECK(c.existential_width == 2);
  CHECK(c.is_ea_combination);
  CHECK_FALSE(c.is_monadic_like);

  Classification ae = classify(parse_r("(forall (x) (exists (y) (R x y)))"));
  CHECK_FALSE(ae.is_sigma2);
  CHECK_FALSE(ae.is_ea_combination);

  Classification mon = classify(parse_pq("(exists (x) (and (P x) (not (Q x))))"));
  CHECK(mon.is_monadic_like);
  CHECK(mon.is_sigma2);
  CHECK(mon.existential_width == 1);

  Classification open = classify(parse_pq("(and (P x) (Q y))"));
  CHECK(open.is_open);
  CHECK(open.is_existential);
  CHECK(open.is_universal);

  CHECK(classify(parse_r("(forall (x) (R x x))")).is_universal);
  CHECK_FALSE(classify(parse_r("(forall (x) (R x x))")).is_existential);

  Signature eq_sig = Signature().add_predicate("P", 1).set_equality(true);
  Classification eqc = classify(parse_formula("(= x y)", eq_sig));
  CHECK(eqc.uses_equality);
  CHECK_FALSE(eqc.is_monadic_like);
  CHECK(classify(parse_formula("(= x x)", eq_sig)).is_monadic_like);
}

TEST_CASE("classification is stable under renaming") {
  std::mt19937 rng(7);
  for (const auto& s : corpus::builder_corpus()) {
    Formula renamed = substitute(s.formula, {{"x", Term::variable("a")},
                                             {"y", Term::variable("b")}});
    Classification before = classify(s.formula);
    Classification after = classify(renamed);
    CHECK(before.is_sigma2 == after.is_sigma2);
    CHECK(before.is_ea_combination == after.is_ea_combination);
    CHECK(before.is_monadic_like == after.is_monadic_like);
    CHECK(before.existential_width == after.existential_width);
  }
  (void)rng;
}

TEST_CASE("monadic-like formulas have one-variable atoms") {
  // checked against an independent traversal
  std::function<bool(const Formula&)> all_atoms_small =
      [&](const Formula& f) -> bool {
    if (f.is_atom()) {
      std::set<std::string> vs;
      for (const auto& t : f.terms()) {
        auto tv = term_vars(t);
        vs.insert(tv.begin(), tv.end());
      }
      return vs.size() <= 1;
    }
    for (const auto& c : f.children())
      if (!all_atoms_small(c)) return false;
    return true;
  };
  for (const auto& s : corpus::builder_corpus())
    CHECK(classify(s.formula).is_monadic_like == all_atoms_small(s.formula));
  for (const auto& s : corpus::monadic_corpus()) {
    CHECK(classify(s.formula).is_monadic_like);
    CHECK(all_atoms_small(s.formula));
  }
}

TEST_CASE("fresh names avoid the used set") {
  CHECK(fresh_name("x", {}) == "x");
  CHECK(fresh_name("x", {"x"}) == "x'");
  CHECK(fresh_name("x", {"x", "x'"}) == "x''");
}

TEST_CASE("equality gate") {
  Signature no_eq = Signature().add_predicate("P", 1);
  Formula eq = Formula::eq(Term::variable("x"), Term::variable("y"));
  CHECK_THROWS_AS(validate_formula(eq, no_eq), std::invalid_argument);
  CHECK_NOTHROW(validate_formula(eq, no_eq.with_equality()));
}
