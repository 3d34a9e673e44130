// test_parser.cpp
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

#include "submodal/corpus.hpp"
#include "submodal/enumerate.hpp"
#include "submodal/parse.hpp"
#include "submodal/render.hpp"

using namespace submodal;

TEST_CASE("signature parsing") {
  Signature s = parse_signature("pred P/1\npred Q/1");
  CHECK(s.purely_monadic());
  CHECK_FALSE(s.equality_allowed());

  Signature g = parse_signature("fun mul/2\nconst e\nequality on");
  CHECK(g.has_function("mul"));
  CHECK(g.function_arity("mul") == 2);
  CHECK(g.has_constant("e"));
  CHECK(g.equality_allowed());

  CHECK_THROWS_AS(parse_signature("pred P/1\npred P/2"), ParseError);
  CHECK_THROWS_AS(parse_signature("pred P/0"), ParseError);
  CHECK_THROWS_AS(parse_signature("pred P"), ParseError);
  CHECK_THROWS_AS(parse_signature("frobnicate X/1"), ParseError);

  // comments and blank lines are fine
  CHECK_NOTHROW(parse_signature("# a comment\n\npred P/1\n"));

  // line numbers land on the offending line
  try {
    parse_signature("pred P/1\npred P/2");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("formula parsing") {
  const Signature& pq = corpus::signature("PQ");
  Formula f = parse_formula("(exists (x) (P x))", pq);
  CHECK(f.kind() == FormulaKind::Exists);
  CHECK(render_formula(f) == "(exists (x) (P x))");

  const Signature& ord_eq = corpus::signature("ord_eq");
  Formula total =
      parse_formula("(forall (x y) (or (< x y) (< y x) (= x y)))", ord_eq);
  CHECK(render_formula(total) == "(forall (x y) (or (< x y) (< y x) (= x y)))");

  const Signature& ord = corpus::signature("ord");
  CHECK_THROWS_AS(parse_formula("(= x y)", ord), ParseError);
  CHECK_THROWS_AS(parse_formula("(P x)", ord), ParseError);       // unknown
  CHECK_THROWS_AS(parse_formula("(< x)", ord), ParseError);       // arity
  CHECK_THROWS_AS(parse_formula("(exists () (< x y))", ord), ParseError);
  CHECK_THROWS_AS(parse_formula("(exists (x x) (< x x))", ord), ParseError);
  CHECK_THROWS_AS(parse_formula("(< x y) (< y x)", ord), ParseError);

  // empty and/or parse to the truth constants
  CHECK(parse_formula("(and)", ord) == Formula::top());
  CHECK(parse_formula("(or)", ord) == Formula::bottom());

  // terms: constants vs variables vs applications
  const Signature& group = corpus::signature("group");
  Formula gf = parse_formula("(= (mul x e) x)", group);
  CHECK(gf.terms()[0].kind() == TermKind::Apply);
  CHECK(gf.terms()[0].args()[1].kind() == TermKind::Constant);
  CHECK(gf.terms()[1].kind() == TermKind::Variable);
  CHECK_THROWS_AS(parse_formula("(= mul x)", group), ParseError);
  CHECK_THROWS_AS(parse_formula("(= (mul x) x)", group), ParseError);
  CHECK_THROWS_AS(parse_formula("(exists (e) (= e e))", group), ParseError);
}

TEST_CASE("model parsing") {
  const Signature& p = corpus::signature("P");
  FiniteModel m = parse_model("universe 2\npred P = {(0)}", p);
  CHECK(m.size() == 2);
  CHECK(m.rel_contains("P", {0}));
  CHECK_FALSE(m.rel_contains("P", {1}));

  const Signature& group = corpus::signature("group");
  FiniteModel c2 = parse_model(
      "universe 2\n"
      "fun mul: (0,0)=0 (0,1)=1 (1,0)=1 (1,1)=0\n"
      "const e = 0\n",
      group);
  CHECK(c2.fun_value("mul", {1, 1}) == 0);
  CHECK(c2.const_value("e") == 0);

  CHECK_THROWS_AS(parse_model("universe 2\nfun mul: (0,0)=0\nconst e = 0", group),
                  ParseError);  // table not total
  CHECK_THROWS_AS(parse_model(
                      "universe 2\n"
                      "fun mul: (0,0)=0 (0,1)=1 (1,0)=1 (1,1)=0\n",
                      group),
                  ParseError);  // missing constant
  CHECK_THROWS_AS(parse_model("universe 2\npred P = {(2)}", p), ParseError);
  CHECK_THROWS_AS(parse_model("universe 2\npred P = {(0) (0)}", p), ParseError);
  CHECK_THROWS_AS(parse_model("pred P = {(0)}", p), ParseError);
  CHECK_THROWS_AS(parse_model("universe 0", p), ParseError);
  CHECK_THROWS_AS(
      parse_model("universe 2\nfun mul: (0,0)=0 (0,0)=1 (0,1)=1 (1,0)=1 "
                  "(1,1)=0\nconst e = 0",
                  group),
      ParseError);  // duplicate entry
}

TEST_CASE("round-trip corpus formulas") {
  auto check_roundtrip = [](const corpus::NamedSentence& s) {
    const Signature& sig = corpus::signature(s.sig);
    Formula reparsed = parse_formula(render_formula(s.formula), sig);
    CHECK(reparsed == s.formula);
  };
  for (const auto& s : corpus::builder_corpus()) check_roundtrip(s);
  for (const auto& s : corpus::monadic_corpus()) check_roundtrip(s);
  for (const auto& s : corpus::ea_corpus()) check_roundtrip(s);
  for (const auto& s : corpus::group_embeddability_quasi_identities())
    check_roundtrip(s);
}

TEST_CASE("round-trip signatures") {
  for (const char* key : {"P", "PQ", "R", "RP", "ord", "ord_eq", "fP",
                          "groupoid", "group"}) {
    const Signature& sig = corpus::signature(key);
    CHECK(parse_signature(render_signature(sig)) == sig);
  }
}

TEST_CASE("round-trip models, sampled") {
  std::mt19937 rng(2024);
  for (const char* key : {"P", "R", "fP", "group"}) {
    const Signature& sig = corpus::signature(key);
    for (int n = 1; n <= 3; ++n) {
      std::uint64_t total = model_space_size(sig, n);
      for (int trial = 0; trial < 8; ++trial) {
        std::uint64_t idx = rng() % total;
        for_each_model_range(sig, n, idx, idx + 1, [&](const FiniteModel& m) {
          FiniteModel reparsed = parse_model(render_model(m), sig);
          CHECK(reparsed == m);
          return true;
        });
      }
    }
  }
}

TEST_CASE("whitespace-insensitive formulas") {
  const Signature& r = corpus::signature("R");
  Formula a = parse_formula("(forall (x y)(or (not (R x y))(R y x)))", r);
  Formula b = parse_formula(
      "(forall\n  (x y)\n  (or (not (R x y))\n      (R y x)))", r);
  CHECK(a == b);
}

TEST_CASE("renamed variables with prime suffixes stay parseable") {
  // the fresh-name generator appends primes; rendered output must reparse
  const Signature& pq = corpus::signature("PQ");
  Formula f = parse_formula("(exists (x') (and (P x') (Q x)))", pq);
  CHECK(free_vars(f) == std::set<std::string>{"x"});
  CHECK(parse_formula(render_formula(f), pq) == f);
}
