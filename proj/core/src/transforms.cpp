// transforms.cpp
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

#include "submodal/transforms.hpp"

#include <algorithm>
#include <stdexcept>

#include "submodal/builders.hpp"

namespace submodal {

namespace {

Formula and1(std::vector<Formula> fs) {
  if (fs.size() == 1) return fs.front();
  return Formula::conj(std::move(fs));
}

Formula or1(std::vector<Formula> fs) {
  if (fs.size() == 1) return fs.front();
  return Formula::disj(std::move(fs));
}

Formula nnf_pos(const Formula& f);
Formula nnf_neg(const Formula& f);

Formula nnf_pos(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::PredAtom:
    case FormulaKind::EqAtom:
      return f;
    case FormulaKind::Not:
      return nnf_neg(f.child());
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<Formula> cs;
      cs.reserve(f.children().size());
      for (const auto& c : f.children()) cs.push_back(nnf_pos(c));
      return f.kind() == FormulaKind::And ? Formula::conj(std::move(cs))
                                          : Formula::disj(std::move(cs));
    }
    case FormulaKind::Exists:
      return Formula::exists(f.vars(), nnf_pos(f.child()));
    case FormulaKind::Forall:
      return Formula::forall(f.vars(), nnf_pos(f.child()));
  }
  throw std::logic_error("unreachable formula kind");
}

Formula nnf_neg(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::PredAtom:
    case FormulaKind::EqAtom:
      return Formula::negation(f);
    case FormulaKind::Not:
      return nnf_pos(f.child());
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<Formula> cs;
      cs.reserve(f.children().size());
      for (const auto& c : f.children()) cs.push_back(nnf_neg(c));
      return f.kind() == FormulaKind::And ? Formula::disj(std::move(cs))
                                          : Formula::conj(std::move(cs));
    }
    case FormulaKind::Exists:
      return Formula::forall(f.vars(), nnf_neg(f.child()));
    case FormulaKind::Forall:
      return Formula::exists(f.vars(), nnf_neg(f.child()));
  }
  throw std::logic_error("unreachable formula kind");
}

bool is_top(const Formula& f) {
  return f.kind() == FormulaKind::And && f.children().empty();
}
bool is_bottom(const Formula& f) {
  return f.kind() == FormulaKind::Or && f.children().empty();
}

}  // namespace

Formula nnf(const Formula& f) { return nnf_pos(f); }

Formula simplify(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::PredAtom:
      return f;
    case FormulaKind::EqAtom:
      if (f.terms()[0] == f.terms()[1]) return Formula::top();
      return f;
    case FormulaKind::Not: {
      Formula c = simplify(f.child());
      if (is_top(c)) return Formula::bottom();
      if (is_bottom(c)) return Formula::top();
      if (c.kind() == FormulaKind::Not) return c.child();
      return Formula::negation(std::move(c));
    }
    case FormulaKind::And:
    case FormulaKind::Or: {
      bool conj = f.kind() == FormulaKind::And;
      std::vector<Formula> cs;
      for (const auto& raw : f.children()) {
        Formula c = simplify(raw);
        if (conj ? is_top(c) : is_bottom(c)) continue;  // neutral element
        if (conj ? is_bottom(c) : is_top(c))
          return conj ? Formula::bottom() : Formula::top();
        if (c.kind() == f.kind()) {
          for (const auto& g : c.children()) cs.push_back(g);
        } else {
          cs.push_back(std::move(c));
        }
      }
      return conj ? and1(std::move(cs)) : or1(std::move(cs));
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      Formula body = simplify(f.child());
      if (is_top(body) || is_bottom(body)) return body;  // nonempty universes
      auto free = free_vars(body);
      std::vector<std::string> vars;
      for (const auto& v : f.vars())
        if (free.count(v)) vars.push_back(v);
      if (vars.empty()) return body;
      return f.kind() == FormulaKind::Exists
                 ? Formula::exists(std::move(vars), std::move(body))
                 : Formula::forall(std::move(vars), std::move(body));
    }
  }
  throw std::logic_error("unreachable formula kind");
}

namespace {

// Summed existential widths with disjunct selection: And sums, Or takes the
// worst selected branch, a leaf contributes its leading block widths.
int ea_bound_rec(const Formula& f) {
  if (f.kind() == FormulaKind::And) {
    int total = 0;
    for (const auto& c : f.children()) total += ea_bound_rec(c);
    return total;
  }
  if (f.kind() == FormulaKind::Or) {
    int best = 0;
    for (const auto& c : f.children()) best = std::max(best, ea_bound_rec(c));
    return best;
  }
  return classify(f).existential_width;
}

}  // namespace

int ea_witness_bound(const Formula& f) {
  Formula n = nnf(f);
  if (!classify(n).is_ea_combination)
    throw std::invalid_argument(
        "not a combination of exists-forall sentences (after nnf)");
  // A purely universal selection still needs one generator: universes are
  // nonempty, so a singleton-generated submodel always exists.
  return std::max(ea_bound_rec(n), 1);
}

std::vector<int> ea_disjunct_bounds(const Formula& f) {
  Formula n = nnf(f);
  if (!classify(n).is_ea_combination)
    throw std::invalid_argument(
        "not a combination of exists-forall sentences (after nnf)");
  std::vector<int> out;
  if (n.kind() == FormulaKind::Or) {
    for (const auto& c : n.children()) out.push_back(ea_bound_rec(c));
  } else {
    out.push_back(ea_bound_rec(n));
  }
  return out;
}

namespace {

bool open_formula(const Formula& f) {
  if (f.is_quantifier()) return false;
  for (const auto& c : f.children())
    if (!open_formula(c)) return false;
  return true;
}

// --- monadic normal form ---------------------------------------------------
//
// Pieces are the non-And/Or units of a formula in the normal form: literals
// and (possibly negated) one-variable existential sentences. A disjunctive
// normal form over pieces lets a quantifier block distribute: each cube
// groups by the single free variable of its pieces, and the block collapses
// onto the groups it actually binds.

void dnf_pieces(const Formula& f, std::vector<std::vector<Formula>>& cubes) {
  if (f.kind() == FormulaKind::Or) {
    for (const auto& c : f.children()) dnf_pieces(c, cubes);
    return;
  }
  if (f.kind() == FormulaKind::And) {
    std::vector<std::vector<Formula>> result{{}};
    for (const auto& c : f.children()) {
      std::vector<std::vector<Formula>> sub;
      dnf_pieces(c, sub);
      std::vector<std::vector<Formula>> next;
      for (const auto& left : result)
        for (const auto& right : sub) {
          std::vector<Formula> cube = left;
          cube.insert(cube.end(), right.begin(), right.end());
          next.push_back(std::move(cube));
        }
      result = std::move(next);
    }
    for (auto& cube : result) cubes.push_back(std::move(cube));
    return;
  }
  cubes.push_back({f});
}

Formula push_block(const std::vector<std::string>& block, const Formula& body);

// Negation of a formula already in the normal form, kept in the normal
// form: distributes over And/Or, cancels double negation, and stops at
// literals and existential pieces.
Formula not_through(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<Formula> cs;
      cs.reserve(f.children().size());
      for (const auto& c : f.children()) cs.push_back(not_through(c));
      return f.kind() == FormulaKind::And ? or1(std::move(cs))
                                          : and1(std::move(cs));
    }
    case FormulaKind::Not:
      return f.child();
    default:
      return Formula::negation(f);
  }
}

Formula norm_rec(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::PredAtom:
    case FormulaKind::EqAtom:
      return f;
    case FormulaKind::Not:
      return not_through(norm_rec(f.child()));
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<Formula> cs;
      cs.reserve(f.children().size());
      for (const auto& c : f.children()) cs.push_back(norm_rec(c));
      return f.kind() == FormulaKind::And ? and1(std::move(cs))
                                          : or1(std::move(cs));
    }
    case FormulaKind::Exists:
      return push_block(f.vars(), norm_rec(f.child()));
    case FormulaKind::Forall:
      // Canonical polarity: universal facts surface as negated
      // existentials, pushed back through the combination so negation
      // stays on literals and existential pieces.
      return not_through(
          push_block(f.vars(), norm_rec(nnf(Formula::negation(f.child())))));
  }
  throw std::logic_error("unreachable formula kind");
}

Formula push_block(const std::vector<std::string>& block, const Formula& body) {
  std::vector<std::vector<Formula>> cubes;
  dnf_pieces(body, cubes);

  std::vector<Formula> out_cubes;
  out_cubes.reserve(cubes.size());
  for (const auto& cube : cubes) {
    // Group the pieces by their single free variable, preserving first
    // occurrence order; closed pieces pass through.
    std::vector<Formula> parts;
    std::map<std::string, std::vector<Formula>> groups;
    for (const auto& piece : cube) {
      auto fv = free_vars(piece);
      if (fv.size() > 1)
        throw std::invalid_argument("piece with two variables in monadic form");
      if (fv.empty() ||
          std::find(block.begin(), block.end(), *fv.begin()) == block.end()) {
        parts.push_back(piece);
        continue;
      }
      const std::string& v = *fv.begin();
      if (!groups.count(v)) parts.push_back(piece);  // position marker
      groups[v].push_back(piece);
    }
    // Rebuild in order, replacing the first piece of each group by the
    // quantified conjunction of the whole group.
    std::vector<Formula> rebuilt;
    std::set<std::string> emitted;
    for (const auto& piece : parts) {
      auto fv = free_vars(piece);
      if (!fv.empty() &&
          std::find(block.begin(), block.end(), *fv.begin()) != block.end()) {
        const std::string& v = *fv.begin();
        if (emitted.insert(v).second)
          rebuilt.push_back(Formula::exists({v}, and1(groups[v])));
        continue;
      }
      rebuilt.push_back(piece);
    }
    out_cubes.push_back(and1(std::move(rebuilt)));
  }
  return or1(std::move(out_cubes));
}

}  // namespace

Formula normalize_monadic(const Formula& f) {
  if (!classify(f).is_monadic_like)
    throw std::invalid_argument("formula is not monadic-like");
  return norm_rec(nnf(f));
}

bool monadic_normal_shape(const Formula& f) {
  if (f.is_quantifier())
    return f.vars().size() == 1 && open_formula(f.child());
  for (const auto& c : f.children())
    if (!monadic_normal_shape(c)) return false;
  return true;
}

Formula relativize_one_param(const Formula& quantified,
                             const std::vector<std::string>& X) {
  if (X.empty()) throw std::invalid_argument("empty relativization tuple");
  if (!quantified.is_quantifier() || quantified.vars().size() != 1)
    throw std::invalid_argument("expected a one-variable quantifier");
  const Formula& body = quantified.child();
  if (!open_formula(body))
    throw std::invalid_argument("quantified body must be open");
  const std::string& y = quantified.vars().front();
  for (const auto& v : free_vars(body))
    if (v != y)
      throw std::invalid_argument("body has a second parameter: " + v);

  std::vector<Formula> instances;
  instances.reserve(X.size());
  for (const auto& x : X)
    instances.push_back(substitute(body, {{y, Term::variable(x)}}));
  return quantified.kind() == FormulaKind::Exists ? or1(std::move(instances))
                                                  : and1(std::move(instances));
}

namespace {

Formula relativize_open_rec(const Formula& f,
                            const std::vector<std::string>& X) {
  switch (f.kind()) {
    case FormulaKind::PredAtom:
    case FormulaKind::EqAtom:
      return f;
    case FormulaKind::Not:
      return Formula::negation(relativize_open_rec(f.child(), X));
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<Formula> cs;
      cs.reserve(f.children().size());
      for (const auto& c : f.children())
        cs.push_back(relativize_open_rec(c, X));
      return f.kind() == FormulaKind::And ? Formula::conj(std::move(cs))
                                          : Formula::disj(std::move(cs));
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      // Every way of sending the block's variables into X gives one
      // substitution instance; Exists collects them disjunctively.
      const auto& ys = f.vars();
      std::size_t width = ys.size();
      std::vector<std::size_t> pick(width, 0);
      std::vector<Formula> instances;
      while (true) {
        std::map<std::string, Term> sub;
        for (std::size_t i = 0; i < width; ++i)
          sub.emplace(ys[i], Term::variable(X[pick[i]]));
        instances.push_back(
            relativize_open_rec(substitute(f.child(), sub), X));
        std::size_t i = width;
        bool done = true;
        while (i > 0) {
          --i;
          if (++pick[i] < X.size()) {
            done = false;
            break;
          }
          pick[i] = 0;
        }
        if (done) break;
      }
      return f.kind() == FormulaKind::Exists ? or1(std::move(instances))
                                             : and1(std::move(instances));
    }
  }
  throw std::logic_error("unreachable formula kind");
}

}  // namespace

Formula relativize_open(const Formula& phi, const std::vector<std::string>& X) {
  if (X.empty()) throw std::invalid_argument("empty relativization tuple");
  std::set<std::string> xs(X.begin(), X.end());
  if (xs.size() != X.size())
    throw std::invalid_argument("repeated relativization variable");
  for (const auto& v : free_vars(phi))
    if (xs.count(v))
      throw std::invalid_argument(
          "relativization variable occurs free in the formula: " + v);
  return relativize_open_rec(rename_bound_away(phi, xs), X);
}

namespace {

// Recognizes the membership guard relativize() attaches to a variable:
// (= y x) or (or (= y x0) (= y x1) ...). Returns the x-list.
bool match_guard(const Formula& g, const std::string& y,
                 std::vector<std::string>& xs) {
  auto match_eq = [&](const Formula& e) {
    if (e.kind() != FormulaKind::EqAtom) return false;
    const Term& l = e.terms()[0];
    const Term& r = e.terms()[1];
    if (l.kind() != TermKind::Variable || r.kind() != TermKind::Variable)
      return false;
    if (l.symbol() != y || r.symbol() == y) return false;
    xs.push_back(r.symbol());
    return true;
  };
  if (g.kind() == FormulaKind::EqAtom) return match_eq(g);
  if (g.kind() != FormulaKind::Or || g.children().empty()) return false;
  for (const auto& c : g.children())
    if (!match_eq(c)) return false;
  return true;
}

bool uses_equality(const Formula& f) { return classify(f).uses_equality; }

// The exact-cardinality builder's clause: (not (or (= xa xb) ...)).
bool looks_like_distinctness(const Formula& f) {
  if (f.kind() != FormulaKind::Not) return false;
  const Formula& c = f.child();
  if (c.kind() == FormulaKind::EqAtom)
    return c.terms()[0].kind() == TermKind::Variable &&
           c.terms()[1].kind() == TermKind::Variable;
  if (c.kind() != FormulaKind::Or) return false;
  if (c.children().empty()) return false;
  for (const auto& e : c.children()) {
    if (e.kind() != FormulaKind::EqAtom) return false;
    if (e.terms()[0].kind() != TermKind::Variable ||
        e.terms()[1].kind() != TermKind::Variable)
      return false;
  }
  return true;
}

Formula elim_rec(const Formula& f);

// Rewrites one membership-guarded block into substitution instances.
// `parts` are the conjuncts (disjuncts for Forall) of the block body;
// guards is var -> x-list.
Formula expand_guarded_block(const Formula& f,
                             const std::map<std::string, std::vector<std::string>>& guards,
                             std::vector<Formula> rest) {
  bool exists = f.kind() == FormulaKind::Exists;
  Formula body = exists ? and1(std::move(rest)) : or1(std::move(rest));
  body = elim_rec(body);

  std::vector<std::string> ys;
  for (const auto& v : f.vars())
    if (free_vars(body).count(v)) ys.push_back(v);
  // variables without occurrence: the guard is vacuous and drops out

  std::vector<Formula> instances;
  std::vector<std::size_t> pick(ys.size(), 0);
  while (true) {
    std::map<std::string, Term> sub;
    for (std::size_t i = 0; i < ys.size(); ++i)
      sub.emplace(ys[i], Term::variable(guards.at(ys[i])[pick[i]]));
    instances.push_back(substitute(body, sub));
    std::size_t i = ys.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++pick[i] < guards.at(ys[i]).size()) {
        done = false;
        break;
      }
      pick[i] = 0;
    }
    if (done) break;
  }
  return exists ? or1(std::move(instances)) : and1(std::move(instances));
}

Formula elim_rec(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::PredAtom:
      return f;
    case FormulaKind::EqAtom:
      throw std::invalid_argument(
          "equality atom outside a builder membership guard");
    case FormulaKind::Not:
      if (looks_like_distinctness(f))
        throw std::invalid_argument(
            "distinctness clause cannot be eliminated over a monadic "
            "signature; it belongs to the build_theta_le route");
      return Formula::negation(elim_rec(f.child()));
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<Formula> cs;
      cs.reserve(f.children().size());
      for (const auto& c : f.children()) cs.push_back(elim_rec(c));
      return f.kind() == FormulaKind::And ? and1(std::move(cs))
                                          : or1(std::move(cs));
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      bool exists = f.kind() == FormulaKind::Exists;
      const Formula& body = f.child();
      // A guarded block's body is the And (Or for Forall) of real parts and
      // one guard per variable (negated guards for Forall).
      std::vector<Formula> parts;
      if (exists && body.kind() == FormulaKind::And)
        parts = body.children();
      else if (!exists && body.kind() == FormulaKind::Or)
        parts = body.children();
      else
        parts = {body};

      std::map<std::string, std::vector<std::string>> guards;
      std::vector<Formula> rest;
      for (const auto& part : parts) {
        const Formula* guard_part = &part;
        if (!exists) {
          if (part.kind() == FormulaKind::Not)
            guard_part = &part.child();
          else
            guard_part = nullptr;
        }
        std::vector<std::string> xs;
        bool matched = false;
        if (guard_part) {
          for (const auto& y : f.vars()) {
            xs.clear();
            if (!guards.count(y) && match_guard(*guard_part, y, xs)) {
              guards.emplace(y, xs);
              matched = true;
              break;
            }
          }
        }
        if (!matched) rest.push_back(part);
      }

      if (guards.empty()) {
        // plain block: recurse below it
        return exists ? Formula::exists(f.vars(), elim_rec(body))
                      : Formula::forall(f.vars(), elim_rec(body));
      }
      for (const auto& y : f.vars())
        if (!guards.count(y))
          throw std::invalid_argument(
              "membership guard missing for quantified variable " + y);
      return expand_guarded_block(f, guards, std::move(rest));
    }
  }
  throw std::logic_error("unreachable formula kind");
}

}  // namespace

Formula eliminate_equality_monadic(const Formula& f) {
  if (!uses_equality(f)) return f;
  return elim_rec(f);
}

Formula build_theta_monadic(const Formula& phi, const Signature& tau) {
  if (!tau.purely_monadic())
    throw std::invalid_argument("signature is not purely monadic");
  if (tau.equality_allowed())
    throw std::invalid_argument("signature must be equality-free");
  if (!is_sentence(phi))
    throw std::invalid_argument("theta builder takes a sentence");
  validate_formula(phi, tau);

  Formula normal = normalize_monadic(phi);
  Formula ea = nnf(normal);
  int bound = ea_witness_bound(ea);

  std::vector<std::string> xs = builder_vars(bound);
  Formula guarded = relativize(ea, xs);
  Formula open = eliminate_equality_monadic(guarded);
  // submodel_formula(tau, bound) is the empty conjunction here (monadic
  // signatures are relational), so the witness prefix is all that is left.
  Formula chi = simplify(Formula::exists(xs, open));
  return simplify(normalize_monadic(chi));
}

}  // namespace submodal
