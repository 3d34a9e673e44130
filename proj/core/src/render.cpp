// render.cpp
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

#include "submodal/render.hpp"

#include <sstream>

namespace submodal {

namespace {

void term_to(std::ostringstream& out, const Term& t) {
  switch (t.kind()) {
    case TermKind::Variable:
    case TermKind::Constant:
      out << t.symbol();
      return;
    case TermKind::Apply:
      out << '(' << t.symbol();
      for (const auto& a : t.args()) {
        out << ' ';
        term_to(out, a);
      }
      out << ')';
      return;
  }
}

void formula_to(std::ostringstream& out, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::PredAtom:
      out << '(' << f.symbol();
      for (const auto& t : f.terms()) {
        out << ' ';
        term_to(out, t);
      }
      out << ')';
      return;
    case FormulaKind::EqAtom:
      out << "(= ";
      term_to(out, f.terms()[0]);
      out << ' ';
      term_to(out, f.terms()[1]);
      out << ')';
      return;
    case FormulaKind::Not:
      out << "(not ";
      formula_to(out, f.child());
      out << ')';
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
      out << (f.kind() == FormulaKind::And ? "(and" : "(or");
      for (const auto& c : f.children()) {
        out << ' ';
        formula_to(out, c);
      }
      out << ')';
      return;
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      out << (f.kind() == FormulaKind::Exists ? "(exists (" : "(forall (");
      bool first = true;
      for (const auto& v : f.vars()) {
        if (!first) out << ' ';
        first = false;
        out << v;
      }
      out << ") ";
      formula_to(out, f.child());
      out << ')';
      return;
    }
  }
}

}  // namespace

std::string render_term(const Term& t) {
  std::ostringstream out;
  term_to(out, t);
  return out.str();
}

std::string render_formula(const Formula& f) {
  std::ostringstream out;
  formula_to(out, f);
  return out.str();
}

std::string render_signature(const Signature& sig) {
  std::ostringstream out;
  for (const auto& [name, arity] : sig.predicates())
    out << "pred " << name << '/' << arity << '\n';
  for (const auto& [name, arity] : sig.functions())
    out << "fun " << name << '/' << arity << '\n';
  for (const auto& name : sig.constants()) out << "const " << name << '\n';
  if (sig.equality_allowed()) out << "equality on\n";
  return out.str();
}

std::string render_model(const FiniteModel& m) {
  std::ostringstream out;
  out << "universe " << m.size() << '\n';
  for (int pi = 0; pi < m.pred_count(); ++pi) {
    out << "pred " << m.pred_name(pi) << " = {";
    int arity = m.pred_arity(pi);
    const auto& table = m.rel_table(pi);
    bool first = true;
    for (std::size_t r = 0; r < table.size(); ++r) {
      if (!table[r]) continue;
      if (!first) out << ' ';
      first = false;
      auto tuple = m.unrank(r, arity);
      out << '(';
      for (int i = 0; i < arity; ++i) {
        if (i) out << ',';
        out << tuple[i];
      }
      out << ')';
    }
    out << "}\n";
  }
  for (int fi = 0; fi < m.fun_count(); ++fi) {
    out << "fun " << m.fun_name(fi) << ':';
    int arity = m.fun_arity(fi);
    const auto& table = m.fun_table(fi);
    for (std::size_t r = 0; r < table.size(); ++r) {
      auto tuple = m.unrank(r, arity);
      out << " (";
      for (int i = 0; i < arity; ++i) {
        if (i) out << ',';
        out << tuple[i];
      }
      out << ")=" << table[r];
    }
    out << '\n';
  }
  for (int c = 0; c < m.const_count(); ++c)
    out << "const " << m.const_name(c) << " = " << m.const_value(c) << '\n';
  return out.str();
}

}  // namespace submodal
