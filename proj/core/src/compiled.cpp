// compiled.cpp
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

#include "submodal/compiled.hpp"

#include <algorithm>
#include <stdexcept>

namespace submodal {

namespace {
constexpr int kMaxSlots = 256;

int lookup_slot(const std::vector<std::pair<std::string, int>>& scope,
                const std::string& name) {
  for (auto it = scope.rbegin(); it != scope.rend(); ++it)
    if (it->first == name) return it->second;
  return -1;
}
}  // namespace

PartialModel::PartialModel(const Signature& sig, int size_in) : size(size_in) {
  auto tsize = [&](int arity) {
    std::size_t s = 1;
    for (int i = 0; i < arity; ++i) s *= static_cast<std::size_t>(size_in);
    return s;
  };
  for (const auto& [name, arity] : sig.predicates()) {
    (void)name;
    rel.emplace_back(tsize(arity), -1);
  }
  for (const auto& [name, arity] : sig.functions()) {
    (void)name;
    fun.emplace_back(tsize(arity), -1);
  }
  cst.assign(sig.constants().size(), -1);

  std::int32_t next = static_cast<std::int32_t>(cst.size());
  for (const auto& table : fun) {
    fun_base.push_back(next);
    next += static_cast<std::int32_t>(table.size());
  }
  for (const auto& table : rel) {
    rel_base.push_back(next);
    next += static_cast<std::int32_t>(table.size());
  }
  total_cells = next;
}

CompiledFormula::CompiledFormula(const Formula& f, const Signature& sig)
    : sig_(&sig) {
  // Equality is meaningful on any model, and the theta builders emit it
  // over tau extended with equality, so only symbols and arities gate
  // evaluation here. validate_formula stays strict about the equality flag.
  validate_formula(f, sig.equality_allowed() ? sig : sig.with_equality());
  for (const auto& v : free_vars(f)) free_.push_back(v);
  std::vector<std::pair<std::string, int>> scope;
  for (const auto& v : free_) scope.emplace_back(v, next_slot_++);
  root_ = compile_node(f, scope);
  if (next_slot_ > kMaxSlots)
    throw std::invalid_argument("formula needs too many variable slots");
}

std::int32_t CompiledFormula::compile_term(
    const Term& t, std::vector<std::pair<std::string, int>>& scope) {
  switch (t.kind()) {
    case TermKind::Variable: {
      int slot = lookup_slot(scope, t.symbol());
      if (slot < 0)
        throw std::invalid_argument("unbound variable: " + t.symbol());
      terms_.push_back({TermKind::Variable, slot, 0, 0});
      return static_cast<std::int32_t>(terms_.size() - 1);
    }
    case TermKind::Constant: {
      int idx = static_cast<int>(std::distance(
          sig_->constants().begin(), sig_->constants().find(t.symbol())));
      terms_.push_back({TermKind::Constant, idx, 0, 0});
      return static_cast<std::int32_t>(terms_.size() - 1);
    }
    case TermKind::Apply: {
      int idx = static_cast<int>(
          std::distance(sig_->functions().begin(),
                        sig_->functions().find(t.symbol())));
      std::vector<std::int32_t> arg_ids;
      arg_ids.reserve(t.args().size());
      for (const auto& a : t.args()) arg_ids.push_back(compile_term(a, scope));
      std::int32_t begin = static_cast<std::int32_t>(term_args_.size());
      for (auto id : arg_ids) term_args_.push_back(id);
      terms_.push_back({TermKind::Apply, idx, begin,
                        static_cast<std::int32_t>(term_args_.size())});
      return static_cast<std::int32_t>(terms_.size() - 1);
    }
  }
  throw std::logic_error("unreachable term kind");
}

std::int32_t CompiledFormula::compile_node(
    const Formula& f, std::vector<std::pair<std::string, int>>& scope) {
  switch (f.kind()) {
    case FormulaKind::PredAtom: {
      int idx = static_cast<int>(
          std::distance(sig_->predicates().begin(),
                        sig_->predicates().find(f.symbol())));
      std::vector<std::int32_t> term_ids;
      for (const auto& t : f.terms()) term_ids.push_back(compile_term(t, scope));
      std::int32_t begin = static_cast<std::int32_t>(node_children_.size());
      for (auto id : term_ids) node_children_.push_back(id);
      nodes_.push_back({f.kind(), idx, begin,
                        static_cast<std::int32_t>(node_children_.size()), 0, 0});
      return static_cast<std::int32_t>(nodes_.size() - 1);
    }
    case FormulaKind::EqAtom: {
      std::int32_t l = compile_term(f.terms()[0], scope);
      std::int32_t r = compile_term(f.terms()[1], scope);
      std::int32_t begin = static_cast<std::int32_t>(node_children_.size());
      node_children_.push_back(l);
      node_children_.push_back(r);
      nodes_.push_back({f.kind(), 0, begin, begin + 2, 0, 0});
      return static_cast<std::int32_t>(nodes_.size() - 1);
    }
    case FormulaKind::Not:
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<std::int32_t> child_ids;
      for (const auto& c : f.children())
        child_ids.push_back(compile_node(c, scope));
      std::int32_t begin = static_cast<std::int32_t>(node_children_.size());
      for (auto id : child_ids) node_children_.push_back(id);
      nodes_.push_back({f.kind(), 0, begin,
                        static_cast<std::int32_t>(node_children_.size()), 0, 0});
      return static_cast<std::int32_t>(nodes_.size() - 1);
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      std::size_t scope_mark = scope.size();
      std::vector<std::int32_t> block_slots;
      for (const auto& v : f.vars()) {
        scope.emplace_back(v, next_slot_);
        block_slots.push_back(next_slot_++);
      }
      std::int32_t child_id = compile_node(f.child(), scope);
      scope.resize(scope_mark);
      std::int32_t sbegin = static_cast<std::int32_t>(slots_.size());
      for (auto s : block_slots) slots_.push_back(s);
      std::int32_t begin = static_cast<std::int32_t>(node_children_.size());
      node_children_.push_back(child_id);
      nodes_.push_back({f.kind(), 0, begin, begin + 1, sbegin,
                        static_cast<std::int32_t>(slots_.size())});
      return static_cast<std::int32_t>(nodes_.size() - 1);
    }
  }
  throw std::logic_error("unreachable formula kind");
}

std::int32_t CompiledFormula::eval_term(const FiniteModel& m, std::int32_t idx,
                                        const std::int32_t* env) const {
  const TermInstr& t = terms_[idx];
  switch (t.kind) {
    case TermKind::Variable:
      return env[t.sym];
    case TermKind::Constant:
      return m.const_value(t.sym);
    case TermKind::Apply: {
      std::size_t r = 0;
      std::size_t n = static_cast<std::size_t>(m.size());
      for (std::int32_t i = t.args_begin; i < t.args_end; ++i)
        r = r * n + static_cast<std::size_t>(eval_term(m, term_args_[i], env));
      return m.fun_table(t.sym)[r];
    }
  }
  return 0;
}

bool CompiledFormula::eval_node(const FiniteModel& m, std::uint64_t domain,
                                std::int32_t idx, std::int32_t* env) const {
  const NodeInstr& nd = nodes_[idx];
  switch (nd.kind) {
    case FormulaKind::PredAtom: {
      std::size_t r = 0;
      std::size_t n = static_cast<std::size_t>(m.size());
      for (std::int32_t i = nd.begin; i < nd.end; ++i)
        r = r * n +
            static_cast<std::size_t>(eval_term(m, node_children_[i], env));
      return m.rel_table(nd.sym)[r] != 0;
    }
    case FormulaKind::EqAtom:
      return eval_term(m, node_children_[nd.begin], env) ==
             eval_term(m, node_children_[nd.begin + 1], env);
    case FormulaKind::Not:
      return !eval_node(m, domain, node_children_[nd.begin], env);
    case FormulaKind::And:
      for (std::int32_t i = nd.begin; i < nd.end; ++i)
        if (!eval_node(m, domain, node_children_[i], env)) return false;
      return true;
    case FormulaKind::Or:
      for (std::int32_t i = nd.begin; i < nd.end; ++i)
        if (eval_node(m, domain, node_children_[i], env)) return true;
      return false;
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      bool want = nd.kind == FormulaKind::Exists;
      std::int32_t child = node_children_[nd.begin];
      std::int32_t nslots = nd.slots_end - nd.slots_begin;
      // Nested loops over the block's variables, each ranging over the
      // domain bits. Short-circuits on the deciding value.
      struct Rec {
        const CompiledFormula* self;
        const FiniteModel* m;
        std::uint64_t domain;
        std::int32_t child;
        std::int32_t slots_begin;
        std::int32_t nslots;
        bool want;
        std::int32_t* env;
        bool run(std::int32_t k) const {
          if (k == nslots)
            return self->eval_node(*m, domain, child, env) == want;
          std::uint64_t d = domain;
          while (d) {
            int v = std::countr_zero(d);
            d &= d - 1;
            env[self->slots_[slots_begin + k]] = v;
            if (run(k + 1)) return true;
          }
          return false;
        }
      };
      Rec rec{this, &m, domain, child, nd.slots_begin, nslots, want, env};
      return rec.run(0) ? want : !want;
    }
  }
  throw std::logic_error("unreachable node kind");
}

bool CompiledFormula::eval_env(const FiniteModel& m, std::uint64_t domain,
                               std::int32_t* env) const {
  return eval_node(m, domain, root_, env);
}

bool CompiledFormula::eval(const FiniteModel& m, const Assignment& a) const {
  std::int32_t env[kMaxSlots];
  for (std::size_t i = 0; i < free_.size(); ++i) {
    auto it = a.find(free_[i]);
    if (it == a.end())
      throw std::invalid_argument("unbound free variable: " + free_[i]);
    if (it->second < 0 || it->second >= m.size())
      throw std::out_of_range("assignment value out of range for " + free_[i]);
    env[i] = it->second;
  }
  return eval_node(m, m.full_domain(), root_, env);
}

bool CompiledFormula::eval_closed(const FiniteModel& m) const {
  return eval_closed_on(m, m.full_domain());
}

bool CompiledFormula::eval_closed_on(const FiniteModel& m,
                                     std::uint64_t domain) const {
  if (!free_.empty())
    throw std::invalid_argument("formula is not a sentence: free variable " +
                                free_.front());
  std::int32_t env[kMaxSlots];
  return eval_node(m, domain, root_, env);
}

std::int32_t CompiledFormula::eval_term3(const PartialModel& m,
                                         std::int32_t idx,
                                         const std::int32_t* env,
                                         std::int32_t* blocked) const {
  const TermInstr& t = terms_[idx];
  switch (t.kind) {
    case TermKind::Variable:
      return env[t.sym];
    case TermKind::Constant: {
      std::int32_t v = m.cst[t.sym];
      if (v < 0 && blocked && *blocked < 0) *blocked = m.const_cell(t.sym);
      return v;
    }
    case TermKind::Apply: {
      std::size_t r = 0;
      std::size_t n = static_cast<std::size_t>(m.size);
      for (std::int32_t i = t.args_begin; i < t.args_end; ++i) {
        std::int32_t v = eval_term3(m, term_args_[i], env, blocked);
        if (v < 0) return -1;
        r = r * n + static_cast<std::size_t>(v);
      }
      std::int32_t v = m.fun[t.sym][r];
      if (v < 0 && blocked && *blocked < 0) *blocked = m.fun_cell(t.sym, r);
      return v;
    }
  }
  return -1;
}

Truth3 CompiledFormula::eval_node3(const PartialModel& m, std::int32_t idx,
                                   std::int32_t* env,
                                   std::int32_t* blocked) const {
  const NodeInstr& nd = nodes_[idx];
  switch (nd.kind) {
    case FormulaKind::PredAtom: {
      std::size_t r = 0;
      std::size_t n = static_cast<std::size_t>(m.size);
      for (std::int32_t i = nd.begin; i < nd.end; ++i) {
        std::int32_t v = eval_term3(m, node_children_[i], env, blocked);
        if (v < 0) return Truth3::Unknown;
        r = r * n + static_cast<std::size_t>(v);
      }
      std::int8_t bit = m.rel[nd.sym][r];
      if (bit < 0) {
        if (blocked && *blocked < 0) *blocked = m.rel_cell(nd.sym, r);
        return Truth3::Unknown;
      }
      return bit ? Truth3::True : Truth3::False;
    }
    case FormulaKind::EqAtom: {
      std::int32_t l = eval_term3(m, node_children_[nd.begin], env, blocked);
      std::int32_t r =
          eval_term3(m, node_children_[nd.begin + 1], env, blocked);
      if (l < 0 || r < 0) return Truth3::Unknown;
      return l == r ? Truth3::True : Truth3::False;
    }
    case FormulaKind::Not: {
      Truth3 v = eval_node3(m, node_children_[nd.begin], env, blocked);
      if (v == Truth3::Unknown) return v;
      return v == Truth3::True ? Truth3::False : Truth3::True;
    }
    case FormulaKind::And: {
      bool unknown = false;
      for (std::int32_t i = nd.begin; i < nd.end; ++i) {
        Truth3 v = eval_node3(m, node_children_[i], env, blocked);
        if (v == Truth3::False) return Truth3::False;
        if (v == Truth3::Unknown) unknown = true;
      }
      return unknown ? Truth3::Unknown : Truth3::True;
    }
    case FormulaKind::Or: {
      bool unknown = false;
      for (std::int32_t i = nd.begin; i < nd.end; ++i) {
        Truth3 v = eval_node3(m, node_children_[i], env, blocked);
        if (v == Truth3::True) return Truth3::True;
        if (v == Truth3::Unknown) unknown = true;
      }
      return unknown ? Truth3::Unknown : Truth3::False;
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      struct Rec {
        const CompiledFormula* self;
        const PartialModel* m;
        std::int32_t child;
        std::int32_t slots_begin;
        std::int32_t nslots;
        std::int32_t* env;
        std::int32_t* blocked;
        bool exists;
        Truth3 run(std::int32_t k) const {
          if (k == nslots) return self->eval_node3(*m, child, env, blocked);
          bool unknown = false;
          for (int v = 0; v < m->size; ++v) {
            env[self->slots_[slots_begin + k]] = v;
            Truth3 t = run(k + 1);
            if (exists && t == Truth3::True) return Truth3::True;
            if (!exists && t == Truth3::False) return Truth3::False;
            if (t == Truth3::Unknown) unknown = true;
          }
          if (unknown) return Truth3::Unknown;
          return exists ? Truth3::False : Truth3::True;
        }
      };
      Rec rec{this,
              &m,
              node_children_[nd.begin],
              nd.slots_begin,
              nd.slots_end - nd.slots_begin,
              env,
              blocked,
              nd.kind == FormulaKind::Exists};
      return rec.run(0);
    }
  }
  throw std::logic_error("unreachable node kind");
}

Truth3 CompiledFormula::eval3(const PartialModel& m, std::int32_t* env,
                              std::int32_t* blocked) const {
  if (blocked) *blocked = -1;
  return eval_node3(m, root_, env, blocked);
}

Truth3 CompiledFormula::eval3_closed(const PartialModel& m) const {
  if (!free_.empty())
    throw std::invalid_argument("formula is not a sentence: free variable " +
                                free_.front());
  std::int32_t env[kMaxSlots];
  return eval_node3(m, root_, env, nullptr);
}

}  // namespace submodal
