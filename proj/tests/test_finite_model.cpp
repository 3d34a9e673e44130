// test_finite_model.cpp
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

#include <bit>
#include <set>

#include "submodal/corpus.hpp"
#include "submodal/enumerate.hpp"
#include "submodal/model.hpp"
#include "submodal/parse.hpp"
#include "submodal/render.hpp"

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

// independent closure oracle: plain worklist over element sets
std::set<int> closure_oracle(const FiniteModel& m, std::set<int> cur) {
  for (int c = 0; c < m.const_count(); ++c) cur.insert(m.const_value(c));
  bool grew = true;
  while (grew) {
    grew = false;
    for (int f = 0; f < m.fun_count(); ++f) {
      int arity = m.fun_arity(f);
      std::vector<int> elems(cur.begin(), cur.end());
      std::vector<int> idx(arity, 0);
      while (true) {
        std::vector<int> tuple(arity);
        for (int i = 0; i < arity; ++i) tuple[i] = elems[idx[i]];
        int v = m.fun_table(f)[m.rank(tuple)];
        if (!cur.count(v)) {
          cur.insert(v);
          grew = true;
        }
        int i = arity - 1;
        while (i >= 0 && ++idx[i] == static_cast<int>(elems.size()))
          idx[i--] = 0;
        if (i < 0) break;
      }
      if (grew) break;
    }
  }
  return cur;
}

}  // namespace

TEST_CASE("evaluation basics") {
  FiniteModel any(corpus::signature("P"), 2);
  CHECK(evaluate(any, Formula::top()));
  CHECK_FALSE(evaluate(any, Formula::bottom()));

  FiniteModel m = parse_model("universe 2\npred P = {(0)}",
                              corpus::signature("P"));
  CHECK(evaluate(m, parse_formula("(exists (x) (P x))", m.signature())));
  CHECK_FALSE(evaluate(m, parse_formula("(forall (x) (P x))", m.signature())));

  // density fails in the three-element chain
  FiniteModel c3 = chain(3);
  Formula dense = parse_formula(
      "(forall (x y) (or (not (< x y)) (exists (z) (and (< x z) (< z y)))))",
      c3.signature());
  CHECK_FALSE(evaluate(c3, dense));
  CHECK(evaluate(chain(1), dense));

  // free variables need assignment values
  Formula open = parse_formula("(P x)", m.signature());
  CHECK(evaluate(m, open, {{"x", 0}}));
  CHECK_FALSE(evaluate(m, open, {{"x", 1}}));
  CHECK_THROWS_AS(evaluate(m, open), std::invalid_argument);
}

TEST_CASE("generated submodels") {
  // relational: no closure beyond the seeds
  FiniteModel m = parse_model("universe 3\npred P = {(1)}",
                              corpus::signature("P"));
  auto [sub, incl] = generated_submodel(m, {1});
  CHECK(sub.size() == 1);
  CHECK(incl == std::vector<int>{1});
  CHECK(sub.rel_contains("P", {0}));

  FiniteModel c4 = cyclic_group(4);
  SUBCASE("a generator spans the whole group") {
    auto closure = generated_closure(c4, {1});
    auto oracle = closure_oracle(c4, {1});
    CHECK(std::popcount(closure) == static_cast<int>(oracle.size()));
    CHECK(closure == 0b1111);
  }
  SUBCASE("the involution generates the two-element subgroup") {
    auto closure = generated_closure(c4, {2});
    auto oracle = closure_oracle(c4, {2});
    CHECK(oracle == std::set<int>{0, 2});
    CHECK(closure == 0b0101);
    auto [sub2, incl2] = generated_submodel(c4, {2});
    CHECK(sub2.size() == 2);
    CHECK(incl2 == std::vector<int>{0, 2});
    CHECK(sub2.fun_value("mul", {1, 1}) == 0);  // 2 + 2 = 0, relabeled
  }
  CHECK_THROWS_AS(generated_submodel(c4, {}), std::invalid_argument);
}

TEST_CASE("subuniverse enumeration") {
  // relational: all nonempty subsets
  FiniteModel m(corpus::signature("P"), 3);
  auto subs = enumerate_subuniverses(m);
  CHECK(subs.size() == 7);

  // C4: the subgroup lattice
  FiniteModel c4 = cyclic_group(4);
  auto groups = enumerate_subuniverses(c4);
  CHECK(groups == std::vector<std::uint64_t>{0b0001, 0b0101, 0b1111});

  // a constant forces membership
  Signature with_c = Signature().add_predicate("P", 1).add_constant("c");
  FiniteModel mc(with_c, 2);
  mc.set_const("c", 1);
  auto subs_c = enumerate_subuniverses(mc);
  CHECK(subs_c == std::vector<std::uint64_t>{0b10, 0b11});

  // each emitted subset is a fixpoint of generation
  for (auto mask : groups) {
    std::vector<int> elems;
    for (int e = 0; e < c4.size(); ++e)
      if (mask >> e & 1) elems.push_back(e);
    CHECK(generated_closure(c4, elems) == mask);
  }

  // relational count property: 2^n - 1
  for (int n = 1; n <= 4; ++n) {
    FiniteModel r(corpus::signature("R"), n);
    CHECK(enumerate_subuniverses(r).size() == (1u << n) - 1);
  }
}

TEST_CASE("extension enumeration") {
  const Signature& p = corpus::signature("P");
  FiniteModel m = parse_model("universe 1\npred P = {}", p);

  auto exts1 = enumerate_extensions(m, 1);
  REQUIRE(exts1.size() == 1);
  CHECK(exts1[0] == m);

  auto exts2 = enumerate_extensions(m, 2);
  CHECK(exts2.size() == 3);  // trivial, new point without P, new point with P
  for (const auto& ext : exts2) {
    CHECK_FALSE(ext.rel_contains("P", {0}));  // restriction intact
  }

  CHECK_THROWS_AS(enumerate_extensions(m, 0), std::invalid_argument);

  // functional: old tuples keep mapping into the old universe
  FiniteModel c2 = cyclic_group(2);
  auto exts = enumerate_extensions(c2, 3);
  for (const auto& ext : exts) {
    CHECK(ext.fun_value("mul", {0, 1}) == 1);
    CHECK(ext.fun_value("mul", {1, 1}) == 0);
    CHECK(ext.const_value("e") == 0);
  }
  // 1 trivial + 3^5 fillings of the five new binary cells
  CHECK(exts.size() == 1 + 243);

  // restriction of each extension is the base model
  for (const auto& ext : exts) {
    if (ext.size() == c2.size()) continue;
    auto [sub, incl] = restrict_to(ext, 0b011);
    CHECK(sub == c2);
  }
}

TEST_CASE("model enumeration") {
  CHECK(enumerate_models(corpus::signature("P"), 2).size() == 4);

  // deterministic order: first model is the all-empty one
  auto models = enumerate_models(corpus::signature("P"), 2);
  CHECK_FALSE(models[0].rel_contains("P", {0}));
  CHECK_FALSE(models[0].rel_contains("P", {1}));
  CHECK(models[1].rel_contains("P", {1}));  // last slot increments first

  // range enumeration agrees with the plain stream
  const Signature& r = corpus::signature("R");
  auto all = enumerate_models(r, 2);
  std::uint64_t total = model_space_size(r, 2);
  CHECK(total == all.size());
  std::vector<FiniteModel> split;
  for_each_model_range(r, 2, 0, total / 2, [&](const FiniteModel& m) {
    split.push_back(m);
    return true;
  });
  for_each_model_range(r, 2, total / 2, total, [&](const FiniteModel& m) {
    split.push_back(m);
    return true;
  });
  CHECK(split == all);
}

TEST_CASE("pruned enumeration matches filtered raw enumeration") {
  const Signature& tau = corpus::signature("groupoid");
  Formula cancel = Formula::conj(
      {corpus::cancellation_left(), corpus::cancellation_right()});

  // raw oracle: all 3^9 tables, Latin squares counted directly
  std::uint64_t latin = 0;
  std::vector<std::string> raw_keys;
  for_each_model(tau, 3, nullptr, [&](const FiniteModel& m) {
    bool ok = true;
    for (int x = 0; x < 3 && ok; ++x) {
      std::uint64_t row = 0, col = 0;
      for (int y = 0; y < 3; ++y) {
        row |= 1ULL << m.fun_value("mul", {x, y});
        col |= 1ULL << m.fun_value("mul", {y, x});
      }
      ok = std::popcount(row) == 3 && std::popcount(col) == 3;
    }
    if (ok) {
      ++latin;
      raw_keys.push_back(render_model(m));
    }
    return true;
  });
  CHECK(latin == 12);

  std::vector<std::string> pruned_keys;
  for_each_model(tau, 3, &cancel, [&](const FiniteModel& m) {
    pruned_keys.push_back(render_model(m));
    return true;
  });
  CHECK(pruned_keys == raw_keys);
}

TEST_CASE("pruned search finds a noncommutative group of order six") {
  const Signature& tau = corpus::signature("group");
  Formula axioms = corpus::group_axioms();
  bool found = false;
  FiniteModel witness(tau, 1);
  for_each_model(tau, 6, &axioms, [&](const FiniteModel& m) {
    for (int a = 0; a < 6 && !found; ++a)
      for (int b = a + 1; b < 6 && !found; ++b)
        if (m.fun_value("mul", {a, b}) != m.fun_value("mul", {b, a})) {
          found = true;
          witness = m;
        }
    return !found;
  });
  REQUIRE(found);

  // the only noncommutative table of order 6 closed under the group laws is
  // the symmetric group on three letters: one identity, three elements of
  // order two, two of order three
  int identity = -1;
  for (int e = 0; e < 6; ++e) {
    bool is_id = true;
    for (int x = 0; x < 6; ++x)
      if (witness.fun_value("mul", {e, x}) != x ||
          witness.fun_value("mul", {x, e}) != x)
        is_id = false;
    if (is_id) identity = e;
  }
  REQUIRE(identity >= 0);
  int order2 = 0, order3 = 0;
  for (int x = 0; x < 6; ++x) {
    if (x == identity) continue;
    int sq = witness.fun_value("mul", {x, x});
    if (sq == identity)
      ++order2;
    else if (witness.fun_value("mul", {sq, x}) == identity)
      ++order3;
  }
  CHECK(order2 == 3);
  CHECK(order3 == 2);
}

TEST_CASE("relabeling and canonical forms") {
  FiniteModel m = parse_model("universe 3\npred R = {(0,1) (1,2)}",
                              corpus::signature("R"));
  FiniteModel rotated = relabel(m, {1, 2, 0});
  CHECK(rotated.rel_contains("R", {1, 2}));
  CHECK(rotated.rel_contains("R", {2, 0}));
  CHECK_FALSE(rotated == m);
  CHECK(canonical_form(m) == canonical_form(rotated));

  FiniteModel c4 = cyclic_group(4);
  FiniteModel swapped = relabel(c4, {0, 3, 2, 1});
  CHECK(canonical_form(c4) == canonical_form(swapped));
}
