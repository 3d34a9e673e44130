// test_transforms.cpp
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

#include "submodal/builders.hpp"
#include "submodal/classify.hpp"
#include "submodal/compiled.hpp"
#include "submodal/corpus.hpp"
#include "submodal/enumerate.hpp"
#include "submodal/modal.hpp"
#include "submodal/parse.hpp"
#include "submodal/render.hpp"
#include "submodal/transforms.hpp"

using namespace submodal;

namespace {

// semantic agreement on every model of the signature up to max_size
void check_equivalent(const Formula& a, const Formula& b, const Signature& sig,
                      int max_size) {
  CompiledFormula ca(a, sig), cb(b, sig);
  for (int n = 1; n <= max_size; ++n) {
    for_each_model(sig, n, nullptr, [&](const FiniteModel& m) {
      CHECK(ca.eval_closed(m) == cb.eval_closed(m));
      return true;
    });
  }
}

Formula parse_pq(const std::string& text) {
  return parse_formula(text, corpus::signature("PQ"));
}

}  // namespace

TEST_CASE("negation normal form") {
  const Signature& pq = corpus::signature("PQ");
  CHECK(render_formula(nnf(parse_pq("(not (exists (x) (P x)))"))) ==
        "(forall (x) (not (P x)))");
  CHECK(render_formula(nnf(parse_pq("(not (and (P x) (Q x)))"))) ==
        "(or (not (P x)) (not (Q x)))");
  CHECK(render_formula(nnf(parse_pq("(not (not (P x)))"))) == "(P x)");
  CHECK(render_formula(nnf(parse_pq("(not (forall (x) (or (P x) (Q x))))"))) ==
        "(exists (x) (and (not (P x)) (not (Q x))))");

  // negations sit on atoms only
  std::function<bool(const Formula&, bool)> atoms_only =
      [&](const Formula& f, bool under_not) -> bool {
    if (f.kind() == FormulaKind::Not)
      return !under_not && f.child().is_atom() &&
             atoms_only(f.child(), true);
    for (const auto& c : f.children())
      if (!atoms_only(c, false)) return false;
    return true;
  };
  for (const auto& s : corpus::builder_corpus()) {
    Formula n = nnf(s.formula);
    CHECK(atoms_only(n, false));
  }
}

TEST_CASE("nnf preserves satisfaction on the corpus") {
  for (const auto& s : corpus::builder_corpus())
    check_equivalent(s.formula, nnf(s.formula), corpus::signature(s.sig), 3);
  for (const auto& s : corpus::monadic_corpus())
    check_equivalent(s.formula, nnf(s.formula), corpus::signature(s.sig), 4);
  // with a binary function present, size 3 is the exhaustive budget
  check_equivalent(corpus::quasigroup_axioms(),
                   nnf(corpus::quasigroup_axioms()),
                   corpus::signature("groupoid"), 3);
}

TEST_CASE("simplify folds constants and vacuous structure") {
  const Signature& pq = corpus::signature("PQ");
  CHECK(simplify(parse_pq("(and (and) (P x))")) == parse_pq("(P x)"));
  CHECK(simplify(parse_pq("(or (or) (P x))")) == parse_pq("(P x)"));
  CHECK(simplify(parse_pq("(and (or) (P x))")) == Formula::bottom());
  CHECK(simplify(parse_pq("(or (and) (P x))")) == Formula::top());
  CHECK(simplify(parse_pq("(not (not (P x)))")) == parse_pq("(P x)"));
  CHECK(simplify(parse_pq("(exists (x y) (P x))")) ==
        parse_pq("(exists (x) (P x))"));
  CHECK(simplify(parse_pq("(exists (x) (and))")) == Formula::top());
  Signature eq = Signature().add_predicate("P", 1).set_equality(true);
  CHECK(simplify(parse_formula("(= x x)", eq)) == Formula::top());
  for (const auto& s : corpus::builder_corpus())
    check_equivalent(s.formula, simplify(s.formula), corpus::signature(s.sig),
                     3);
}

TEST_CASE("witness bounds for exists-forall combinations") {
  const Signature& r = corpus::signature("R");
  CHECK(ea_witness_bound(parse_formula(
            "(exists (x y) (forall (z) (R x y)))", r)) == 2);
  CHECK(ea_witness_bound(parse_formula("(forall (x) (R x x))", r)) == 1);

  // max over the disjunct selections: max(1, 1 + 2) = 3
  Formula three = parse_formula(
      "(or (exists (x) (forall (y) (R x y))) "
      "(and (exists (u) (R u u)) (exists (v w) (and (R v v) (R w w)))))",
      r);
  CHECK(ea_witness_bound(three) == 3);
  CHECK(ea_disjunct_bounds(three) == std::vector<int>{1, 3});

  // nnf runs first, so a negated universal counts as existential
  CHECK(ea_witness_bound(parse_formula(
            "(not (forall (x y) (R x y)))", r)) == 2);

  CHECK_THROWS_AS(
      ea_witness_bound(parse_formula("(forall (x) (exists (y) (R x y)))", r)),
      std::invalid_argument);
}

TEST_CASE("witness bound shadow at small scale") {
  // every satisfying model has a generated submodel within the bound; for
  // relational signatures a submodel of that cardinality
  for (const auto& s : corpus::ea_corpus()) {
    const Signature& sig = corpus::signature(s.sig);
    int bound = ea_witness_bound(s.formula);
    CompiledFormula cf(s.formula, sig);
    bool relational = sig.relational();
    for (int n = 1; n <= 3; ++n) {
      for_each_model(sig, n, nullptr, [&](const FiniteModel& m) {
        if (!cf.eval_closed(m)) return true;
        CHECK(theta_gen_sem(m, s.formula, bound));
        if (relational) CHECK(theta_le_sem(m, s.formula, bound));
        return true;
      });
    }
  }
}

TEST_CASE("universal and existential preservation at small scale") {
  // universal sentences persist to submodels, existential ones to extensions
  auto corpora = {&corpus::builder_corpus(), &corpus::monadic_corpus(),
                  &corpus::rp_corpus()};
  for (const auto* corpus_ptr : corpora) {
    for (const auto& s : *corpus_ptr) {
      const Signature& sig = corpus::signature(s.sig);
      Classification c = classify(nnf(s.formula));
      CompiledFormula cf(s.formula, sig);
      if (c.is_universal) {
        for (int n = 1; n <= 3; ++n) {
          for_each_model(sig, n, nullptr, [&](const FiniteModel& m) {
            if (!cf.eval_closed(m)) return true;
            for_each_subuniverse(m, [&](std::uint64_t mask) {
              CHECK(cf.eval_closed_on(m, mask));
              return true;
            });
            return true;
          });
        }
      }
      if (c.is_existential) {
        for (int n = 1; n <= 2; ++n) {
          for_each_model(sig, n, nullptr, [&](const FiniteModel& m) {
            if (!cf.eval_closed(m)) return true;
            for_each_extension(m, 3, [&](const FiniteModel& ext) {
              CHECK(cf.eval_closed(ext));
              return true;
            });
            return true;
          });
        }
      }
    }
  }
}

TEST_CASE("monadic normal form shapes and goldens") {
  const Signature& pq = corpus::signature("PQ");

  CHECK(render_formula(normalize_monadic(
            parse_pq("(exists (x y) (and (P x) (Q y)))"))) ==
        "(and (exists (x) (P x)) (exists (y) (Q y)))");

  Formula fixpoint = parse_pq("(exists (x) (P x))");
  CHECK(normalize_monadic(fixpoint) == fixpoint);

  CHECK(render_formula(normalize_monadic(
            parse_pq("(forall (x) (or (P x) (not (P x))))"))) ==
        "(not (exists (x) (and (not (P x)) (P x))))");

  CHECK_THROWS_AS(normalize_monadic(parse_formula(
                      "(exists (x y) (R x y))", corpus::signature("R"))),
                  std::invalid_argument);

  for (const auto& s : corpus::monadic_corpus()) {
    Formula normal = normalize_monadic(s.formula);
    CHECK(monadic_normal_shape(normal));
    check_equivalent(s.formula, normal, corpus::signature(s.sig), 4);
  }
  (void)pq;
}

TEST_CASE("one-parameter relativization") {
  const Signature& pq = corpus::signature("PQ");
  Formula ex = parse_pq("(exists (y) (P y))");
  CHECK(render_formula(relativize_one_param(ex, {"x0", "x1"})) ==
        "(or (P x0) (P x1))");
  Formula all = parse_pq("(forall (y) (P y))");
  CHECK(render_formula(relativize_one_param(all, {"x0"})) == "(P x0)");

  Formula multi = parse_pq("(exists (y) (and (P y) (not (Q y))))");
  CHECK(render_formula(relativize_one_param(multi, {"a", "b"})) ==
        "(or (and (P a) (not (Q a))) (and (P b) (not (Q b))))");

  CHECK_THROWS_AS(relativize_one_param(parse_pq("(P x)"), {"x0"}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      relativize_one_param(parse_pq("(exists (y) (exists (z) (P z)))"), {"x0"}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      relativize_one_param(parse_pq("(exists (y) (and (P y) (Q z)))"), {"x0"}),
      std::invalid_argument);
}

TEST_CASE("open relativization agrees with the guarded one") {
  // expanding quantifiers into instances matches evaluating the membership
  // guards, model by model
  for (const auto& s : corpus::builder_corpus()) {
    const Signature& sig = corpus::signature(s.sig);
    Signature sig_eq = sig.with_equality();
    std::vector<std::string> xs{"x0", "x1"};
    Formula guarded = relativize(s.formula, xs);
    Formula open = relativize_open(s.formula, xs);
    CHECK(classify(open).is_open);
    CompiledFormula cg(guarded, sig_eq), co(open, sig_eq);
    for (int n = 1; n <= 3; ++n) {
      for_each_model(sig, n, nullptr, [&](const FiniteModel& m) {
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            Assignment asg{{"x0", a}, {"x1", b}};
            CHECK(cg.eval(m, asg) == co.eval(m, asg));
          }
        return true;
      });
    }
  }
}

TEST_CASE("equality elimination over monadic guards") {
  const Signature& pq = corpus::signature("PQ");
  Signature pq_eq = pq.with_equality();

  Formula guarded = parse_formula(
      "(exists (y) (and (P y) (or (= y x0) (= y x1))))", pq_eq);
  CHECK(render_formula(eliminate_equality_monadic(guarded)) ==
        "(or (P x0) (P x1))");

  Formula no_eq = parse_pq("(exists (y) (P y))");
  CHECK(eliminate_equality_monadic(no_eq) == no_eq);

  // a universal guard from the dual clause
  Formula forall_guarded = parse_formula(
      "(forall (y) (or (P y) (not (or (= y x0) (= y x1)))))", pq_eq);
  CHECK(render_formula(eliminate_equality_monadic(forall_guarded)) ==
        "(and (P x0) (P x1))");

  // the distinctness clause of the exact-cardinality builder is out of scope
  Formula exact = build_theta_eq(parse_pq("(exists (x) (P x))"), pq, 2);
  CHECK_THROWS_AS(eliminate_equality_monadic(exact), std::invalid_argument);

  // stray equality is rejected
  Formula stray = parse_formula("(exists (y) (= y y))", pq_eq);
  CHECK_THROWS_AS(eliminate_equality_monadic(stray), std::invalid_argument);
}

TEST_CASE("closed-form monadic theta sentence") {
  const Signature& p = corpus::signature("P");
  const Signature& pq = corpus::signature("PQ");

  // theta of an existential sentence is itself
  Formula some_p = parse_formula("(exists (x) (P x))", p);
  CHECK(alpha_equivalent(build_theta_monadic(some_p, p), some_p));

  // a singleton submodel witnesses theta of a universal sentence
  Formula all_p = parse_formula("(forall (x) (P x))", p);
  Formula chi = build_theta_monadic(all_p, p);
  CHECK(alpha_equivalent(chi, parse_formula("(exists (x0) (P x0))", p)));

  // the conjunction case needs a joint witness
  Formula mixed = parse_pq("(and (exists (x) (P x)) (forall (y) (Q y)))");
  Formula chi_mixed = build_theta_monadic(mixed, pq);
  CHECK_FALSE(classify(chi_mixed).uses_equality);

  // rejected inputs
  CHECK_THROWS_AS(build_theta_monadic(some_p, corpus::signature("R")),
                  std::invalid_argument);
  Signature p_eq = corpus::signature("P").with_equality();
  CHECK_THROWS_AS(
      build_theta_monadic(parse_formula("(exists (x) (P x))", p_eq), p_eq),
      std::invalid_argument);
}

TEST_CASE("monadic theta sentence matches the semantic operator") {
  for (const auto& s : corpus::monadic_corpus()) {
    const Signature& sig = corpus::signature(s.sig);
    Formula chi = build_theta_monadic(s.formula, sig);
    CHECK_FALSE(classify(chi).uses_equality);
    CHECK(monadic_normal_shape(chi));
    CHECK_NOTHROW(validate_formula(chi, sig));
    CompiledFormula cchi(chi, sig);
    for (int n = 1; n <= 4; ++n) {
      for_each_model(sig, n, nullptr, [&](const FiniteModel& m) {
        CHECK(cchi.eval_closed(m) == theta_sem(m, s.formula));
        return true;
      });
    }
  }
}
