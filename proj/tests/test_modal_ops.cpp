// test_modal_ops.cpp
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

#include <random>

#include "submodal/builders.hpp"
#include "submodal/classify.hpp"
#include "submodal/compiled.hpp"
#include "submodal/corpus.hpp"
#include "submodal/enumerate.hpp"
#include "submodal/modal.hpp"
#include "submodal/model.hpp"
#include "submodal/parse.hpp"
#include "submodal/render.hpp"
#include "submodal/transforms.hpp"

using namespace submodal;

namespace {

FiniteModel cyclic_group(int n) {
  FiniteModel m(corpus::signature("group"), n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.set_fun("mul", {a, b}, (a + b) % n);
  m.set_const("e", 0);
  return m;
}

FiniteModel chain(int n) {
  FiniteModel m(corpus::signature("ord"), n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) m.set_rel("<", {a, b}, true);
  return m;
}

}  // namespace

TEST_CASE("theta on linear orders") {
  FiniteModel c3 = chain(3);
  Formula has_max = parse_formula("(exists (x) (forall (y) (not (< x y))))",
                                  c3.signature());
  CHECK(theta_sem(c3, has_max));
  // any singleton suborder witnesses a minimal element
  Formula has_min = parse_formula("(exists (x) (forall (y) (not (< y x))))",
                                  c3.signature());
  CHECK(theta_sem(c3, has_min));
  CHECK(theta_le_sem(c3, has_min, 1));

  CHECK_FALSE(theta_sem(c3, corpus::no_minimal()));

  Formula exists_edge =
      parse_formula("(exists (x y) (< x y))", c3.signature());
  CHECK(theta_sem(c3, exists_edge));  // the model itself is a witness
  CHECK(evaluate(c3, exists_edge));

  CHECK_THROWS_AS(theta_sem(c3, parse_formula("(< x y)", c3.signature())),
                  std::invalid_argument);
}

TEST_CASE("bounded theta variants") {
  FiniteModel c3 = chain(3);
  Formula exists_edge =
      parse_formula("(exists (x y) (< x y))", c3.signature());
  CHECK(theta_le_sem(c3, exists_edge, 3) == theta_sem(c3, exists_edge));
  CHECK(theta_le_sem(c3, exists_edge, 2));
  CHECK_FALSE(theta_le_sem(c3, exists_edge, 1));
  CHECK(theta_eq_sem(c3, exists_edge, 2));
  CHECK(theta_eq_sem(c3, exists_edge, 3));
  CHECK_THROWS_AS(theta_le_sem(c3, exists_edge, 0), std::invalid_argument);

  // exact-cardinality truth over relational signatures
  for (int n = 1; n <= 4; ++n)
    CHECK(theta_eq_sem(c3, Formula::top(), n) == (n <= 3));

  // one generator reaches the involution's subgroup in C4
  FiniteModel c4 = cyclic_group(4);
  Formula involution = parse_formula(
      "(exists (x) (and (not (= x e)) (= (mul x x) e)))", c4.signature());
  CHECK(theta_gen_sem(c4, involution, 1));
  // ... but not in C3, which has no element of order two
  FiniteModel c3g = cyclic_group(3);
  CHECK_FALSE(theta_gen_sem(c3g, involution, 3));
}

TEST_CASE("theta star") {
  FiniteModel c2 = cyclic_group(2);
  Formula axioms = corpus::group_axioms();
  CHECK(theta_star_sem(c2, axioms, 2));  // already a group

  // a cancellative two-element table with identity is a group already
  FiniteModel c2table(corpus::signature("group"), 2);
  c2table.set_fun("mul", {0, 0}, 0);
  c2table.set_fun("mul", {0, 1}, 1);
  c2table.set_fun("mul", {1, 0}, 1);
  c2table.set_fun("mul", {1, 1}, 0);
  c2table.set_const("e", 0);
  CHECK(theta_star_sem(c2table, axioms, 2));

  // the constant table cannot extend to a group: cancellation fails in the
  // base and universal sentences persist to submodels
  FiniteModel constant(corpus::signature("group"), 2);  // mul = 0, e = 0
  for (int k = 2; k <= 6; ++k) CHECK_FALSE(theta_star_sem(constant, axioms, k));

  CHECK_THROWS_AS(theta_star_sem(c2, axioms, 1), std::invalid_argument);
}

TEST_CASE("pruned extension search agrees with the raw stream") {
  // relational space, small enough to scan both ways
  const Signature& rp = corpus::signature("RP");
  Formula phi = corpus::rp_corpus()[0].formula;
  CompiledFormula cf(phi, rp);
  std::uint64_t total = model_space_size(rp, 2);
  for_each_model_range(rp, 2, 0, total, [&](const FiniteModel& m) {
    bool raw = false;
    for_each_extension(m, 3, [&](const FiniteModel& ext) {
      if (cf.eval_closed(ext)) {
        raw = true;
        return false;
      }
      return true;
    });
    CHECK(raw == exists_extension_satisfying(m, 3, phi));
    return true;
  });

  // functional space: one-element bases extended by one point
  const Signature& g = corpus::signature("group");
  Formula axioms = corpus::group_axioms();
  CompiledFormula ca(axioms, g);
  for_each_model(g, 1, nullptr, [&](const FiniteModel& m) {
    bool raw = false;
    for_each_extension(m, 2, [&](const FiniteModel& ext) {
      if (ca.eval_closed(ext)) {
        raw = true;
        return false;
      }
      return true;
    });
    CHECK(raw == exists_extension_satisfying(m, 2, axioms));
    return true;
  });
}

TEST_CASE("theta star monotone in the bound") {
  const Signature& p = corpus::signature("P");
  Formula two_kinds = parse_formula(
      "(exists (x y) (and (P x) (not (P y))))", p);
  for_each_model(p, 2, nullptr, [&](const FiniteModel& m) {
    for (int k = m.size(); k < 4; ++k)
      if (theta_star_sem(m, two_kinds, k))
        CHECK(theta_star_sem(m, two_kinds, k + 1));
    return true;
  });
}

TEST_CASE("isomorphism invariance of theta and theta star") {
  std::mt19937 rng(11);
  const Signature& r = corpus::signature("R");
  Formula serial = parse_formula("(forall (x) (exists (y) (R x y)))", r);
  Formula edge = parse_formula("(exists (x y) (and (R x y) (not (R y x))))", r);
  std::uint64_t total = model_space_size(r, 3);
  for (int trial = 0; trial < 24; ++trial) {
    std::uint64_t idx = rng() % total;
    for_each_model_range(r, 3, idx, idx + 1, [&](const FiniteModel& m) {
      std::vector<int> perm{0, 1, 2};
      std::shuffle(perm.begin(), perm.end(), rng);
      FiniteModel other = relabel(m, perm);
      CHECK(theta_sem(m, serial) == theta_sem(other, serial));
      CHECK(theta_sem(m, edge) == theta_sem(other, edge));
      CHECK(theta_star_sem(m, edge, 4) == theta_star_sem(other, edge, 4));
      return true;
    });
  }
}

TEST_CASE("relativization clauses") {
  const Signature& pq = corpus::signature("PQ");
  std::vector<std::string> xs{"x0", "x1"};

  // atoms are untouched
  Formula atom = parse_formula("(P x)", pq);
  CHECK(relativize(atom, xs) == atom);

  // an existential block acquires the membership disjunction
  Formula ex = parse_formula("(exists (y) (P y))", pq);
  CHECK(render_formula(relativize(ex, xs)) ==
        "(exists (y) (and (P y) (or (= y x0) (= y x1))))");

  // open formulas are fixed points
  Formula open = parse_formula("(and (P x) (not (Q x)))", pq);
  CHECK(relativize(open, xs) == open);

  // clashing bound variables are renamed away from the tuple
  Formula clash = parse_formula("(exists (x0) (P x0))", pq);
  Formula rel = relativize(clash, xs);
  CHECK(render_formula(rel) ==
        "(exists (x0') (and (P x0') (or (= x0' x0) (= x0' x1))))");

  CHECK_THROWS_AS(relativize(atom, {}), std::invalid_argument);
  CHECK_THROWS_AS(relativize(parse_formula("(P x0)", pq), xs),
                  std::invalid_argument);
}

TEST_CASE("submodel formula") {
  CHECK(render_formula(submodel_formula(corpus::signature("R"), 2)) ==
        "(and)");

  Signature just_c = Signature().add_constant("c");
  CHECK(render_formula(submodel_formula(just_c, 2)) ==
        "(or (= c x0) (= c x1))");

  Signature just_f = Signature().add_function("f", 1);
  CHECK(render_formula(submodel_formula(just_f, 1)) == "(= (f x0) x0)");

  // two symbols, one unary function over two variables
  Signature cf = Signature().add_constant("c").add_function("f", 1);
  Formula psi = submodel_formula(cf, 2);
  CHECK(render_formula(psi) ==
        "(and (or (= c x0) (= c x1)) (or (= (f x0) x0) (= (f x0) x1)) "
        "(or (= (f x1) x0) (= (f x1) x1)))");
}

TEST_CASE("builder matches the semantic operator exhaustively") {
  // the spec'd single-sentence case first
  const Signature& p = corpus::signature("P");
  Formula all_p = parse_formula("(forall (y) (P y))", p);
  Formula built = build_theta_le(all_p, p, 1);
  CompiledFormula cb(built, p.with_equality());
  for (int n = 1; n <= 3; ++n) {
    for_each_model(p, n, nullptr, [&](const FiniteModel& m) {
      CHECK(cb.eval_closed(m) == theta_le_sem(m, all_p, 1));
      return true;
    });
  }

  // a vacuous bound reduces to plain theta
  const Signature& r = corpus::signature("R");
  Formula serial = parse_formula("(forall (x) (exists (y) (R x y)))", r);
  Formula big = build_theta_le(serial, r, 3);
  CompiledFormula cbig(big, r.with_equality());
  for (int n = 1; n <= 3; ++n) {
    for_each_model(r, n, nullptr, [&](const FiniteModel& m) {
      CHECK(cbig.eval_closed(m) == theta_sem(m, serial));
      return true;
    });
  }
}

TEST_CASE("exact-cardinality builder") {
  const Signature& p = corpus::signature("P");
  Formula top = Formula::top();
  Formula exact2 = build_theta_eq(top, p, 2);
  FiniteModel one(p, 1);
  CHECK_FALSE(evaluate(one, exact2));  // distinctness unsatisfiable
  FiniteModel two(p, 2);
  CHECK(evaluate(two, exact2));

  // builder agrees with the semantic exact variant on all small models
  Formula some_p = parse_formula("(exists (x) (P x))", p);
  Formula built = build_theta_eq(some_p, p, 2);
  CompiledFormula cb(built, p.with_equality());
  for (int n = 1; n <= 3; ++n) {
    for_each_model(p, n, nullptr, [&](const FiniteModel& m) {
      CHECK(cb.eval_closed(m) == theta_eq_sem(m, some_p, 2));
      return true;
    });
  }
}

TEST_CASE("builder output lives in tau plus equality") {
  const Signature& p = corpus::signature("P");
  Formula some_p = parse_formula("(exists (x) (P x))", p);
  Formula built = build_theta_le(some_p, p, 2);
  CHECK_THROWS_AS(validate_formula(built, p), std::invalid_argument);
  CHECK_NOTHROW(validate_formula(built, p.with_equality()));
}

TEST_CASE("T_phi fragments") {
  const Signature& p = corpus::signature("P");
  Formula some_p = parse_formula("(exists (x) (P x))", p);
  Theory t = build_t_phi(some_p, p, 3);
  REQUIRE(t.sentences.size() == 3);

  // members are genuinely universal sentences
  for (const auto& member : t.sentences) {
    CHECK(is_sentence(member));
    CHECK(classify(member).is_universal);
  }

  // member n is equivalent to the negation of the bounded semantic operator
  for (int n = 1; n <= 3; ++n) {
    CompiledFormula cm(t.sentences[n - 1], p.with_equality());
    for (int sz = 1; sz <= 3; ++sz) {
      for_each_model(p, sz, nullptr, [&](const FiniteModel& m) {
        CHECK(cm.eval_closed(m) == !theta_le_sem(m, some_p, n));
        return true;
      });
    }
  }

  // a model with nonempty P violates the first member
  FiniteModel m = parse_model("universe 2\npred P = {(0)}", p);
  CHECK_FALSE(evaluate(m, t.sentences[0]));

  // the finite fragment characterizes "no submodel satisfies phi"
  const Signature& r = corpus::signature("R");
  Formula serial = parse_formula("(forall (x) (exists (y) (R x y)))", r);
  Theory tr = build_t_phi(serial, r, 3);
  for (int sz = 1; sz <= 3; ++sz) {
    for_each_model(r, sz, nullptr, [&](const FiniteModel& m2) {
      bool all = true;
      for (const auto& member : tr.sentences)
        if (!evaluate(m2, member)) all = false;
      CHECK(all == !theta_sem(m2, serial));
      return true;
    });
  }

  // function symbols are rejected up front
  CHECK_THROWS_AS(build_t_phi(Formula::top(), corpus::signature("group"), 2),
                  std::invalid_argument);
}

TEST_CASE("every finite linear order satisfies the order fragment") {
  const Signature& tau = corpus::signature("ord_eq");
  Formula phi = corpus::order_endpoint_escape();
  Theory t = build_t_phi(phi, tau, 4);
  CompiledFormula is_linear(corpus::linear_order_axioms(), tau);
  std::vector<CompiledFormula> members;
  for (const auto& s : t.sentences) members.emplace_back(s, tau);
  int checked = 0;
  for (int n = 1; n <= 4; ++n) {
    for_each_model(tau, n, nullptr, [&](const FiniteModel& m) {
      if (!is_linear.eval_closed(m)) return true;
      ++checked;
      for (const auto& member : members) CHECK(member.eval_closed(m));
      return true;
    });
  }
  CHECK(checked == 1 + 2 + 6 + 24);  // labeled linear orders
}

TEST_CASE("theta monotone in the size bound") {
  const Signature& r = corpus::signature("R");
  Formula dom = parse_formula("(exists (x) (forall (y) (R x y)))", r);
  for_each_model(r, 3, nullptr, [&](const FiniteModel& m) {
    for (int n = 1; n < 3; ++n)
      if (theta_le_sem(m, dom, n)) CHECK(theta_le_sem(m, dom, n + 1));
    return true;
  });
}

TEST_CASE("existential theta collapses to evaluation") {
  // Corollary-style shadow: for existential sentences theta equals truth.
  // Binary-relation models exhaust size 4; monadic ones go to size 5.
  const Signature& r = corpus::signature("R");
  Formula edge = parse_formula("(exists (x y) (and (R x y) (not (R y x))))", r);
  CompiledFormula ce(edge, r);
  for (int n = 1; n <= 4; ++n) {
    for_each_model(r, n, nullptr, [&](const FiniteModel& m) {
      CHECK(theta_sem(m, edge) == ce.eval_closed(m));
      return true;
    });
  }
  const Signature& pq = corpus::signature("PQ");
  Formula pick = parse_formula("(exists (x y) (and (P x) (not (Q y))))", pq);
  CompiledFormula cp(pick, pq);
  for (int n = 1; n <= 5; ++n) {
    for_each_model(pq, n, nullptr, [&](const FiniteModel& m) {
      CHECK(theta_sem(m, pick) == cp.eval_closed(m));
      return true;
    });
  }
}

TEST_CASE("theta is vacuously true when the negation has no small models") {
  const Signature& p = corpus::signature("P");
  Formula taut = parse_formula(
      "(or (exists (x) (P x)) (forall (y) (not (P y))))", p);
  Formula neg = Formula::negation(taut);
  for (int n = 1; n <= 4; ++n)
    CHECK(enumerate_models(p, n, &neg).empty());
  for (int n = 1; n <= 4; ++n) {
    for_each_model(p, n, nullptr, [&](const FiniteModel& m) {
      CHECK(theta_sem(m, taut));
      return true;
    });
  }
}
