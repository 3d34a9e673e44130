// corpus.cpp
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

#include "submodal/corpus.hpp"

#include <map>
#include <stdexcept>

#include "submodal/parse.hpp"

namespace submodal::corpus {

namespace {

std::map<std::string, Signature> make_signatures() {
  std::map<std::string, Signature> s;
  s["P"] = Signature().add_predicate("P", 1);
  s["PQ"] = Signature().add_predicate("P", 1).add_predicate("Q", 1);
  s["R"] = Signature().add_predicate("R", 2);
  s["RP"] = Signature().add_predicate("R", 2).add_predicate("P", 1);
  s["ord"] = Signature().add_predicate("<", 2);
  s["ord_eq"] = Signature().add_predicate("<", 2).set_equality(true);
  s["fP"] = Signature().add_function("f", 1).add_predicate("P", 1);
  s["groupoid"] = Signature().add_function("mul", 2).set_equality(true);
  s["group"] =
      Signature().add_function("mul", 2).add_constant("e").set_equality(true);
  return s;
}

Formula fml(const std::string& sig_key, const std::string& text) {
  return parse_formula(text, signature(sig_key));
}

NamedSentence ns(std::string name, std::string sig_key, const std::string& text) {
  Formula f = fml(sig_key, text);
  return {std::move(name), std::move(sig_key), std::move(f)};
}

}  // namespace

const Signature& signature(const std::string& key) {
  static const std::map<std::string, Signature> sigs = make_signatures();
  auto it = sigs.find(key);
  if (it == sigs.end())
    throw std::invalid_argument("unknown corpus signature: " + key);
  return it->second;
}

const std::vector<NamedSentence>& builder_corpus() {
  static const std::vector<NamedSentence> corpus = {
      ns("exists_p", "P", "(exists (x) (P x))"),
      ns("forall_p", "P", "(forall (x) (P x))"),
      ns("some_and_all_p", "P", "(and (exists (x) (P x)) (forall (y) (P y)))"),
      ns("all_or_none_p", "P",
         "(or (forall (x) (P x)) (forall (x) (not (P x))))"),
      ns("two_kinds_p", "P", "(exists (x y) (and (P x) (not (P y))))"),
      ns("no_p", "P", "(not (exists (x) (P x)))"),
      ns("p_without_q", "PQ", "(exists (x) (and (P x) (not (Q x))))"),
      ns("cover_pq", "PQ", "(forall (x) (or (P x) (Q x)))"),
      ns("both_nonempty", "PQ",
         "(and (exists (x) (P x)) (exists (y) (Q y)))"),
      ns("pivot_or_q", "PQ", "(exists (x) (forall (y) (or (P x) (Q y))))"),
      ns("overlap_or_no_p", "PQ",
         "(or (exists (x) (and (P x) (Q x))) (forall (y) (not (P y))))"),
      ns("q_somewhere_or_p", "PQ",
         "(forall (x) (exists (y) (or (Q y) (P x))))"),
      ns("loop", "R", "(exists (x) (R x x))"),
      ns("reflexive", "R", "(forall (x) (R x x))"),
      ns("dominator", "R", "(exists (x) (forall (y) (R x y)))"),
      ns("serial", "R", "(forall (x) (exists (y) (R x y)))"),
      ns("symmetric", "R",
         "(forall (x y) (or (not (R x y)) (R y x)))"),
      ns("transitive", "R",
         "(forall (x y z) (or (not (R x y)) (not (R y z)) (R x z)))"),
      ns("one_way_edge", "R", "(exists (x y) (and (R x y) (not (R y x))))"),
      ns("loopfree_edge", "R",
         "(and (forall (x) (not (R x x))) (exists (x y) (R x y)))"),
  };
  return corpus;
}

const std::vector<NamedSentence>& monadic_corpus() {
  static const std::vector<NamedSentence> corpus = {
      ns("m_exists_p", "P", "(exists (x) (P x))"),
      ns("m_forall_p", "P", "(forall (x) (P x))"),
      ns("m_no_p", "P", "(forall (x) (not (P x)))"),
      ns("m_tautology", "P", "(forall (x) (or (P x) (not (P x))))"),
      ns("m_p_without_q", "PQ", "(exists (x) (and (P x) (not (Q x))))"),
      ns("m_cover", "PQ", "(forall (x) (or (P x) (Q x)))"),
      ns("m_some_p_all_q", "PQ",
         "(and (exists (x) (P x)) (forall (y) (Q y)))"),
      ns("m_pair", "PQ", "(exists (x y) (and (P x) (Q y)))"),
      ns("m_all_p_or_some_not_q", "PQ",
         "(or (forall (x) (P x)) (exists (y) (not (Q y))))"),
      ns("m_disjoint", "PQ", "(not (exists (x) (and (P x) (Q x))))"),
      ns("m_ae_swap", "PQ", "(forall (x) (exists (y) (or (P x) (Q y))))"),
      ns("m_nested", "PQ",
         "(exists (x) (forall (y) (or (and (P x) (Q y)) (not (Q y)))))"),
  };
  return corpus;
}

const std::vector<NamedSentence>& ea_corpus() {
  static const std::vector<NamedSentence> corpus = {
      ns("ea_two_kinds_p", "P", "(exists (x y) (and (P x) (not (P y))))"),
      ns("ea_forall_p", "P", "(forall (x) (P x))"),
      ns("ea_pivot", "PQ", "(exists (x) (forall (y) (or (P x) (Q y))))"),
      ns("ea_combo_pq", "PQ",
         "(and (exists (x) (forall (y) (or (P x) (Q y)))) (exists (z) (Q z)))"),
      ns("ea_dominator", "R", "(exists (x) (forall (y) (R x y)))"),
      ns("ea_disjunct_three", "R",
         "(or (exists (x) (forall (y) (R x y))) "
         "(and (exists (u) (R u u)) (exists (v w) (and (R v v) (R w w)))))"),
      ns("ea_fun_exists", "fP", "(exists (x) (P (f x)))"),
      ns("ea_fun_forall", "fP", "(forall (x) (P (f x)))"),
      ns("ea_fun_mixed", "fP",
         "(exists (x y) (and (P (f x)) (not (P y))))"),
  };
  return corpus;
}

const std::vector<NamedSentence>& rp_corpus() {
  static const std::vector<NamedSentence> corpus = {
      ns("rp_guarded", "RP",
         "(exists (x) (and (P x) (forall (y) (or (not (R x y)) (P y)))))"),
      ns("rp_serial_p", "RP",
         "(forall (x) (or (not (P x)) (exists (y) (R x y))))"),
  };
  return corpus;
}

Formula no_minimal() { return fml("ord", "(forall (x) (exists (y) (< y x)))"); }
Formula no_maximal() { return fml("ord", "(forall (x) (exists (y) (< x y)))"); }

Formula density_sentence() {
  // dense linear order with at least one comparable pair
  return fml("ord_eq",
             "(and "
             "(forall (x) (not (< x x))) "
             "(forall (x y z) (or (not (< x y)) (not (< y z)) (< x z))) "
             "(forall (x y) (or (< x y) (< y x) (= x y))) "
             "(exists (x y) (< x y)) "
             "(forall (x y) (or (not (< x y)) (exists (z) (and (< x z) (< z y)"
             ")))))");
}

Formula strict_order_axioms() {
  return fml("ord",
             "(and (forall (x) (not (< x x))) "
             "(forall (x y z) (or (not (< x y)) (not (< y z)) (< x z))))");
}

Formula linear_order_axioms() {
  return fml("ord_eq",
             "(and (forall (x) (not (< x x))) "
             "(forall (x y z) (or (not (< x y)) (not (< y z)) (< x z))) "
             "(forall (x y) (or (< x y) (< y x) (= x y))))");
}

Formula order_endpoint_escape() {
  // if a linear order, then no first or no last element
  return Formula::disj({Formula::negation(linear_order_axioms()),
                        no_minimal(), no_maximal()});
}

Formula min_size_if_linear(int n) {
  if (n < 1) throw std::invalid_argument("size must be >= 1");
  // linear order -> there are at least n pairwise distinct elements
  std::vector<std::string> vars;
  for (int i = 0; i < n; ++i) vars.push_back("y" + std::to_string(i));
  std::vector<Formula> distinct;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      distinct.push_back(Formula::negation(
          Formula::eq(Term::variable(vars[a]), Term::variable(vars[b]))));
  Formula big = distinct.empty() ? Formula::exists(vars, Formula::top())
                                 : Formula::exists(vars, Formula::conj(distinct));
  return Formula::disj({Formula::negation(linear_order_axioms()), big});
}

Formula cancellation_left() {
  return fml("groupoid",
             "(forall (x y z) (or (not (= (mul x y) (mul x z))) (= y z)))");
}
Formula cancellation_right() {
  return fml("groupoid",
             "(forall (x y z) (or (not (= (mul y x) (mul z x))) (= y z)))");
}
Formula solvability_left() {
  return fml("groupoid", "(forall (x z) (exists (y) (= (mul x y) z)))");
}
Formula solvability_right() {
  return fml("groupoid", "(forall (x z) (exists (y) (= (mul y x) z)))");
}
Formula associativity_group() {
  return fml("group",
             "(forall (x y z) (= (mul (mul x y) z) (mul x (mul y z))))");
}
Formula commutativity_group() {
  return fml("group", "(forall (x y) (= (mul x y) (mul y x)))");
}

Formula quasigroup_axioms() {
  return Formula::conj({cancellation_left(), cancellation_right(),
                        solvability_left(), solvability_right()});
}

Formula group_axioms() {
  return Formula::conj({
      fml("group", "(forall (x y z) (= (mul (mul x y) z) (mul x (mul y z))))"),
      fml("group", "(forall (x y z) (or (not (= (mul x y) (mul x z))) (= y z)))"),
      fml("group", "(forall (x y z) (or (not (= (mul y x) (mul z x))) (= y z)))"),
      fml("group", "(forall (x) (exists (y) (= (mul x y) e)))"),
      fml("group", "(forall (x) (exists (y) (= (mul y x) e)))"),
  });
}

Formula abelian_axioms() {
  return Formula::conj({
      fml("group", "(forall (x y z) (= (mul (mul x y) z) (mul x (mul y z))))"),
      fml("group", "(forall (x y) (= (mul x y) (mul y x)))"),
      fml("group", "(forall (x y z) (or (not (= (mul x y) (mul x z))) (= y z)))"),
      fml("group", "(forall (x y z) (or (not (= (mul y x) (mul z x))) (= y z)))"),
      fml("group", "(forall (x) (exists (y) (= (mul x y) e)))"),
      fml("group", "(forall (x) (exists (y) (= (mul y x) e)))"),
  });
}

const std::vector<NamedSentence>& group_embeddability_quasi_identities() {
  static const std::vector<NamedSentence> corpus = {
      ns("cancel_left", "groupoid",
         "(forall (x y z) (or (not (= (mul x y) (mul x z))) (= y z)))"),
      ns("cancel_right", "groupoid",
         "(forall (x y z) (or (not (= (mul y x) (mul z x))) (= y z)))"),
      // ax=by, cx=dy, cu=dv entail au=bv in any group
      ns("transfer_law", "groupoid",
         "(forall (a b c d u v x y) "
         "(or (not (and (= (mul a x) (mul b y)) "
         "(= (mul c x) (mul d y)) "
         "(= (mul c u) (mul d v)))) "
         "(= (mul a u) (mul b v))))"),
  };
  return corpus;
}

const std::vector<SyntacticCriterionPair>& syntactic_criterion_pairs() {
  static const std::vector<SyntacticCriterionPair> pairs = [] {
    std::vector<SyntacticCriterionPair> out;
    out.push_back({"dominator", "R", fml("R", "(exists (x) (forall (y) (R x y)))"),
                   fml("R", "(exists (x) (forall (y) (R x y)))"), 1, 1});
    out.push_back(
        {"loopfree_edge", "R",
         fml("R", "(and (forall (x) (not (R x x))) (exists (x y) (R x y)))"),
         fml("R",
             "(exists (x y) (forall (z) (and (R x y) (not (R z z)))))"),
         1, 2});
    out.push_back({"order_endpoints", "ord_eq", order_endpoint_escape(),
                   fml("ord_eq", "(exists (x) (< x x))"), 3, 1});
    return out;
  }();
  return pairs;
}

}  // namespace submodal::corpus
