// formula.cpp
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

#include "submodal/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace submodal {

Term Term::variable(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  return Term(std::make_shared<const Node>(
      Node{TermKind::Variable, std::move(name), {}}));
}

Term Term::constant(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty constant name");
  return Term(std::make_shared<const Node>(
      Node{TermKind::Constant, std::move(name), {}}));
}

Term Term::apply(std::string function, std::vector<Term> args) {
  if (args.empty())
    throw std::invalid_argument("function application needs arguments: " +
                                function);
  return Term(std::make_shared<const Node>(
      Node{TermKind::Apply, std::move(function), std::move(args)}));
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  if (node_->symbol != other.node_->symbol) return false;
  return node_->args == other.node_->args;
}

Formula Formula::make(Node n) {
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::pred(std::string name, std::vector<Term> terms) {
  if (terms.empty())
    throw std::invalid_argument("predicate atom needs arguments: " + name);
  return make({FormulaKind::PredAtom, std::move(name), std::move(terms), {}, {}});
}

Formula Formula::eq(Term lhs, Term rhs) {
  return make({FormulaKind::EqAtom, "=", {std::move(lhs), std::move(rhs)}, {}, {}});
}

Formula Formula::negation(Formula f) {
  return make({FormulaKind::Not, "", {}, {std::move(f)}, {}});
}

Formula Formula::conj(std::vector<Formula> fs) {
  return make({FormulaKind::And, "", {}, std::move(fs), {}});
}

Formula Formula::disj(std::vector<Formula> fs) {
  return make({FormulaKind::Or, "", {}, std::move(fs), {}});
}

namespace {
void check_block(const std::vector<std::string>& vars) {
  if (vars.empty()) throw std::invalid_argument("empty quantifier block");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw std::invalid_argument("empty variable name in block");
    if (!seen.insert(v).second)
      throw std::invalid_argument("repeated variable in quantifier block: " + v);
  }
}
}  // namespace

Formula Formula::exists(std::vector<std::string> vars, Formula body) {
  check_block(vars);
  return make({FormulaKind::Exists, "", {}, {std::move(body)}, std::move(vars)});
}

Formula Formula::forall(std::vector<std::string> vars, Formula body) {
  check_block(vars);
  return make({FormulaKind::Forall, "", {}, {std::move(body)}, std::move(vars)});
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  if (node_->symbol != other.node_->symbol) return false;
  if (node_->vars != other.node_->vars) return false;
  if (node_->terms != other.node_->terms) return false;
  return node_->children == other.node_->children;
}

std::set<std::string> term_vars(const Term& t) {
  std::set<std::string> out;
  if (t.kind() == TermKind::Variable) {
    out.insert(t.symbol());
    return out;
  }
  for (const auto& a : t.args()) {
    auto sub = term_vars(a);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::PredAtom:
    case FormulaKind::EqAtom:
      for (const auto& t : f.terms())
        for (const auto& v : term_vars(t))
          if (!bound.count(v)) out.insert(v);
      return;
    case FormulaKind::Not:
    case FormulaKind::And:
    case FormulaKind::Or:
      for (const auto& c : f.children()) collect_free(c, bound, out);
      return;
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      std::vector<std::string> added;
      for (const auto& v : f.vars())
        if (bound.insert(v).second) added.push_back(v);
      collect_free(f.child(), bound, out);
      for (const auto& v : added) bound.erase(v);
      return;
    }
  }
}

void collect_all(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::PredAtom:
    case FormulaKind::EqAtom:
      for (const auto& t : f.terms()) {
        auto vs = term_vars(t);
        out.insert(vs.begin(), vs.end());
      }
      return;
    default:
      for (const auto& v : f.vars()) out.insert(v);
      for (const auto& c : f.children()) collect_all(c, out);
      return;
  }
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> all_vars(const Formula& f) {
  std::set<std::string> out;
  collect_all(f, out);
  return out;
}

bool is_sentence(const Formula& f) { return free_vars(f).empty(); }

std::string fresh_name(const std::string& base,
                       const std::set<std::string>& used) {
  std::string candidate = base;
  while (used.count(candidate)) candidate += '\'';
  return candidate;
}

Term substitute_term(const Term& t, const std::map<std::string, Term>& subst) {
  switch (t.kind()) {
    case TermKind::Variable: {
      auto it = subst.find(t.symbol());
      return it == subst.end() ? t : it->second;
    }
    case TermKind::Constant:
      return t;
    case TermKind::Apply: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(substitute_term(a, subst));
      return Term::apply(t.symbol(), std::move(args));
    }
  }
  throw std::logic_error("unreachable term kind");
}

namespace {

Formula substitute_rec(const Formula& f, std::map<std::string, Term> subst) {
  switch (f.kind()) {
    case FormulaKind::PredAtom: {
      std::vector<Term> ts;
      ts.reserve(f.terms().size());
      for (const auto& t : f.terms()) ts.push_back(substitute_term(t, subst));
      return Formula::pred(f.symbol(), std::move(ts));
    }
    case FormulaKind::EqAtom:
      return Formula::eq(substitute_term(f.terms()[0], subst),
                         substitute_term(f.terms()[1], subst));
    case FormulaKind::Not:
      return Formula::negation(substitute_rec(f.child(), subst));
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<Formula> cs;
      cs.reserve(f.children().size());
      for (const auto& c : f.children()) cs.push_back(substitute_rec(c, subst));
      return f.kind() == FormulaKind::And ? Formula::conj(std::move(cs))
                                          : Formula::disj(std::move(cs));
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      // Bound variables shadow the substitution. A block variable that
      // occurs in some replacement term must be renamed first.
      std::map<std::string, Term> inner = subst;
      for (const auto& v : f.vars()) inner.erase(v);

      std::set<std::string> replacement_vars;
      for (const auto& [from, to] : inner) {
        (void)from;
        auto vs = term_vars(to);
        replacement_vars.insert(vs.begin(), vs.end());
      }

      std::vector<std::string> vars = f.vars();
      Formula body = f.child();
      std::set<std::string> used = all_vars(body);
      used.insert(replacement_vars.begin(), replacement_vars.end());
      for (const auto& [from, to] : inner) {
        (void)to;
        used.insert(from);
      }

      std::map<std::string, Term> renames;
      for (auto& v : vars) {
        if (replacement_vars.count(v)) {
          std::string nv = fresh_name(v, used);
          used.insert(nv);
          renames.emplace(v, Term::variable(nv));
          v = nv;
        }
      }
      if (!renames.empty()) body = substitute_rec(body, renames);
      body = substitute_rec(body, inner);
      return f.kind() == FormulaKind::Exists
                 ? Formula::exists(std::move(vars), std::move(body))
                 : Formula::forall(std::move(vars), std::move(body));
    }
  }
  throw std::logic_error("unreachable formula kind");
}

}  // namespace

Formula substitute(const Formula& f, const std::map<std::string, Term>& subst) {
  if (subst.empty()) return f;
  return substitute_rec(f, subst);
}

Formula substitute(const Formula& f, const std::map<std::string, Term>& subst,
                   const Signature& sig) {
  for (const auto& [v, t] : subst) {
    (void)v;
    validate_term(t, sig);
  }
  return substitute(f, subst);
}

namespace {

bool alpha_term(const Term& a, const Term& b,
                const std::map<std::string, std::string>& ab,
                const std::map<std::string, std::string>& ba) {
  if (a.kind() != b.kind()) return false;
  if (a.kind() == TermKind::Variable) {
    auto ita = ab.find(a.symbol());
    auto itb = ba.find(b.symbol());
    if (ita != ab.end() || itb != ba.end())
      return ita != ab.end() && itb != ba.end() && ita->second == b.symbol() &&
             itb->second == a.symbol();
    return a.symbol() == b.symbol();  // both free
  }
  if (a.symbol() != b.symbol()) return false;
  if (a.args().size() != b.args().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!alpha_term(a.args()[i], b.args()[i], ab, ba)) return false;
  return true;
}

bool alpha_rec(const Formula& a, const Formula& b,
               std::map<std::string, std::string>& ab,
               std::map<std::string, std::string>& ba) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FormulaKind::PredAtom:
      if (a.symbol() != b.symbol()) return false;
      [[fallthrough]];
    case FormulaKind::EqAtom: {
      if (a.terms().size() != b.terms().size()) return false;
      for (std::size_t i = 0; i < a.terms().size(); ++i)
        if (!alpha_term(a.terms()[i], b.terms()[i], ab, ba)) return false;
      return true;
    }
    case FormulaKind::Not:
    case FormulaKind::And:
    case FormulaKind::Or: {
      if (a.children().size() != b.children().size()) return false;
      for (std::size_t i = 0; i < a.children().size(); ++i)
        if (!alpha_rec(a.children()[i], b.children()[i], ab, ba)) return false;
      return true;
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      if (a.vars().size() != b.vars().size()) return false;
      // Save shadowed pairings, install the block pairing, recurse, restore.
      std::vector<std::pair<std::string, std::string>> saved_ab, saved_ba;
      for (std::size_t i = 0; i < a.vars().size(); ++i) {
        const auto& va = a.vars()[i];
        const auto& vb = b.vars()[i];
        auto ita = ab.find(va);
        saved_ab.emplace_back(va, ita == ab.end() ? std::string() : ita->second);
        auto itb = ba.find(vb);
        saved_ba.emplace_back(vb, itb == ba.end() ? std::string() : itb->second);
        ab[va] = vb;
        ba[vb] = va;
      }
      bool ok = alpha_rec(a.child(), b.child(), ab, ba);
      for (auto it = saved_ab.rbegin(); it != saved_ab.rend(); ++it) {
        if (it->second.empty())
          ab.erase(it->first);
        else
          ab[it->first] = it->second;
      }
      for (auto it = saved_ba.rbegin(); it != saved_ba.rend(); ++it) {
        if (it->second.empty())
          ba.erase(it->first);
        else
          ba[it->first] = it->second;
      }
      return ok;
    }
  }
  return false;
}

}  // namespace

bool alpha_equivalent(const Formula& a, const Formula& b) {
  std::map<std::string, std::string> ab, ba;
  return alpha_rec(a, b, ab, ba);
}

Formula rename_bound_away(const Formula& f, const std::set<std::string>& avoid) {
  switch (f.kind()) {
    case FormulaKind::PredAtom:
    case FormulaKind::EqAtom:
      return f;
    case FormulaKind::Not:
      return Formula::negation(rename_bound_away(f.child(), avoid));
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<Formula> cs;
      cs.reserve(f.children().size());
      for (const auto& c : f.children())
        cs.push_back(rename_bound_away(c, avoid));
      return f.kind() == FormulaKind::And ? Formula::conj(std::move(cs))
                                          : Formula::disj(std::move(cs));
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      Formula body = rename_bound_away(f.child(), avoid);
      std::vector<std::string> vars = f.vars();
      std::set<std::string> used = all_vars(body);
      used.insert(avoid.begin(), avoid.end());
      std::map<std::string, Term> renames;
      for (auto& v : vars) {
        if (avoid.count(v)) {
          std::string nv = fresh_name(v, used);
          used.insert(nv);
          renames.emplace(v, Term::variable(nv));
          v = nv;
        }
      }
      if (!renames.empty()) body = substitute(body, renames);
      return f.kind() == FormulaKind::Exists
                 ? Formula::exists(std::move(vars), std::move(body))
                 : Formula::forall(std::move(vars), std::move(body));
    }
  }
  throw std::logic_error("unreachable formula kind");
}

Formula flatten(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::PredAtom:
    case FormulaKind::EqAtom:
      return f;
    case FormulaKind::Not:
      return Formula::negation(flatten(f.child()));
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<Formula> cs;
      for (const auto& c : f.children()) {
        Formula fc = flatten(c);
        if (fc.kind() == f.kind()) {
          for (const auto& g : fc.children()) cs.push_back(g);
        } else {
          cs.push_back(fc);
        }
      }
      return f.kind() == FormulaKind::And ? Formula::conj(std::move(cs))
                                          : Formula::disj(std::move(cs));
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      Formula body = flatten(f.child());
      std::vector<std::string> vars = f.vars();
      // Merge directly nested blocks of the same kind unless that would
      // put a shadowed name twice into one block.
      while (body.kind() == f.kind()) {
        bool shadows = false;
        for (const auto& v : body.vars())
          if (std::find(vars.begin(), vars.end(), v) != vars.end())
            shadows = true;
        if (shadows) break;
        vars.insert(vars.end(), body.vars().begin(), body.vars().end());
        body = body.child();
      }
      return f.kind() == FormulaKind::Exists
                 ? Formula::exists(std::move(vars), std::move(body))
                 : Formula::forall(std::move(vars), std::move(body));
    }
  }
  throw std::logic_error("unreachable formula kind");
}

void validate_term(const Term& t, const Signature& sig) {
  switch (t.kind()) {
    case TermKind::Variable:
      if (sig.declares(t.symbol()))
        throw std::invalid_argument("declared symbol used as variable: " +
                                    t.symbol());
      return;
    case TermKind::Constant:
      if (!sig.has_constant(t.symbol()))
        throw std::invalid_argument("unknown constant: " + t.symbol());
      return;
    case TermKind::Apply: {
      int arity = sig.function_arity(t.symbol());
      if (static_cast<std::size_t>(arity) != t.args().size())
        throw std::invalid_argument(
            "arity mismatch for function " + t.symbol() + ": expected " +
            std::to_string(arity) + ", got " + std::to_string(t.args().size()));
      for (const auto& a : t.args()) validate_term(a, sig);
      return;
    }
  }
}

void validate_formula(const Formula& f, const Signature& sig) {
  switch (f.kind()) {
    case FormulaKind::PredAtom: {
      int arity = sig.predicate_arity(f.symbol());
      if (static_cast<std::size_t>(arity) != f.terms().size())
        throw std::invalid_argument(
            "arity mismatch for predicate " + f.symbol() + ": expected " +
            std::to_string(arity) + ", got " + std::to_string(f.terms().size()));
      for (const auto& t : f.terms()) validate_term(t, sig);
      return;
    }
    case FormulaKind::EqAtom:
      if (!sig.equality_allowed())
        throw std::invalid_argument("equality atom in equality-free signature");
      validate_term(f.terms()[0], sig);
      validate_term(f.terms()[1], sig);
      return;
    default:
      for (const auto& v : f.vars())
        if (sig.declares(v))
          throw std::invalid_argument("declared symbol used as variable: " + v);
      for (const auto& c : f.children()) validate_formula(c, sig);
      return;
  }
}

}  // namespace submodal
