// builders.cpp
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

#include "submodal/builders.hpp"

#include <stdexcept>

#include "submodal/transforms.hpp"

namespace submodal {

namespace {

// n-ary constructors that collapse a one-element list to its element, the
// form the displayed sentences take when an index set is a singleton.
Formula and1(std::vector<Formula> fs) {
  if (fs.size() == 1) return fs.front();
  return Formula::conj(std::move(fs));
}

Formula or1(std::vector<Formula> fs) {
  if (fs.size() == 1) return fs.front();
  return Formula::disj(std::move(fs));
}

// y = x0 \/ y = x1 \/ ... over the relativization variables.
Formula membership(const std::string& y, const std::vector<std::string>& X) {
  std::vector<Formula> eqs;
  eqs.reserve(X.size());
  for (const auto& x : X)
    eqs.push_back(Formula::eq(Term::variable(y), Term::variable(x)));
  return or1(std::move(eqs));
}

Formula relativize_rec(const Formula& f, const std::vector<std::string>& X) {
  switch (f.kind()) {
    case FormulaKind::PredAtom:
    case FormulaKind::EqAtom:
      return f;
    case FormulaKind::Not:
      return Formula::negation(relativize_rec(f.child(), X));
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<Formula> cs;
      cs.reserve(f.children().size());
      for (const auto& c : f.children()) cs.push_back(relativize_rec(c, X));
      return f.kind() == FormulaKind::And ? Formula::conj(std::move(cs))
                                          : Formula::disj(std::move(cs));
    }
    case FormulaKind::Exists: {
      std::vector<Formula> parts;
      parts.push_back(relativize_rec(f.child(), X));
      for (const auto& y : f.vars()) parts.push_back(membership(y, X));
      return Formula::exists(f.vars(), Formula::conj(std::move(parts)));
    }
    case FormulaKind::Forall: {
      // Dual of the existential clause: forall ys (~member(y0) \/ ... \/ body).
      // Guards come first so evaluation dismisses non-members before ever
      // touching the body.
      std::vector<Formula> parts;
      for (const auto& y : f.vars())
        parts.push_back(Formula::negation(membership(y, X)));
      parts.push_back(relativize_rec(f.child(), X));
      return Formula::forall(f.vars(), Formula::disj(std::move(parts)));
    }
  }
  throw std::logic_error("unreachable formula kind");
}

void check_x_vars(const Formula& phi, const std::vector<std::string>& X) {
  if (X.empty()) throw std::invalid_argument("empty relativization tuple");
  std::set<std::string> xs(X.begin(), X.end());
  if (xs.size() != X.size())
    throw std::invalid_argument("repeated relativization variable");
  for (const auto& v : free_vars(phi))
    if (xs.count(v))
      throw std::invalid_argument(
          "relativization variable occurs free in the formula: " + v);
}

}  // namespace

std::vector<std::string> builder_vars(int n) {
  std::vector<std::string> xs;
  xs.reserve(n);
  for (int i = 0; i < n; ++i) xs.push_back("x" + std::to_string(i));
  return xs;
}

Formula relativize(const Formula& phi, const std::vector<std::string>& X) {
  check_x_vars(phi, X);
  Formula clean = rename_bound_away(phi, {X.begin(), X.end()});
  return relativize_rec(clean, X);
}

Formula submodel_formula(const Signature& tau, int n) {
  if (n < 1) throw std::invalid_argument("submodel formula needs n >= 1");
  std::vector<std::string> xs = builder_vars(n);
  std::vector<Formula> conjuncts;

  // Merged sorted pass over fnc(tau): constants are the 0-ary case.
  auto value_clause = [&](const Term& value) {
    std::vector<Formula> eqs;
    eqs.reserve(n);
    for (int g = 0; g < n; ++g)
      eqs.push_back(Formula::eq(value, Term::variable(xs[g])));
    return or1(std::move(eqs));
  };

  auto cit = tau.constants().begin();
  auto fit = tau.functions().begin();
  while (cit != tau.constants().end() || fit != tau.functions().end()) {
    bool take_const = fit == tau.functions().end() ||
                      (cit != tau.constants().end() && *cit < fit->first);
    if (take_const) {
      conjuncts.push_back(value_clause(Term::constant(*cit)));
      ++cit;
    } else {
      int arity = fit->second;
      std::vector<int> tuple(arity, 0);
      while (true) {
        std::vector<Term> args;
        args.reserve(arity);
        for (int i = 0; i < arity; ++i)
          args.push_back(Term::variable(xs[tuple[i]]));
        conjuncts.push_back(value_clause(Term::apply(fit->first, args)));
        int i = arity - 1;
        while (i >= 0 && ++tuple[i] == n) tuple[i--] = 0;
        if (i < 0) break;
      }
      ++fit;
    }
  }
  return and1(std::move(conjuncts));
}

Formula build_theta_le(const Formula& phi, const Signature& tau, int n) {
  if (!is_sentence(phi))
    throw std::invalid_argument("theta builder takes a sentence");
  if (n < 1) throw std::invalid_argument("submodel size bound must be >= 1");
  std::vector<std::string> xs = builder_vars(n);
  return Formula::exists(
      xs, Formula::conj({submodel_formula(tau, n), relativize(phi, xs)}));
}

Formula build_theta_eq(const Formula& phi, const Signature& tau, int n) {
  if (!is_sentence(phi))
    throw std::invalid_argument("theta builder takes a sentence");
  if (n < 1) throw std::invalid_argument("submodel size bound must be >= 1");
  std::vector<std::string> xs = builder_vars(n);
  std::vector<Formula> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      pairs.push_back(Formula::eq(Term::variable(xs[a]), Term::variable(xs[b])));
  return Formula::exists(
      xs, Formula::conj({submodel_formula(tau, n), relativize(phi, xs),
                         Formula::negation(Formula::disj(std::move(pairs)))}));
}

Theory build_t_phi(const Formula& phi, const Signature& tau, int N) {
  if (!tau.relational())
    throw std::invalid_argument(
        "T_phi requires a relational signature (no function or constant "
        "symbols)");
  if (!is_sentence(phi))
    throw std::invalid_argument("T_phi takes a sentence");
  if (N < 1) throw std::invalid_argument("fragment bound must be >= 1");
  Theory t;
  for (int n = 1; n <= N; ++n) {
    std::vector<std::string> xs = builder_vars(n);
    // Quantifiers restricted to the x's collapse to substitution instances,
    // leaving an open matrix; pushing the negation through the block prefix
    // then yields a universal sentence.
    Formula matrix = Formula::conj(
        {submodel_formula(tau, n), relativize_open(phi, xs)});
    t.sentences.push_back(
        nnf(Formula::negation(Formula::exists(xs, matrix))));
  }
  return t;
}

}  // namespace submodal
