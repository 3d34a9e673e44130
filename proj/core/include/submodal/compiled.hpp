// compiled.hpp
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

#ifndef SUBMODAL_COMPILED_HPP
#define SUBMODAL_COMPILED_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "submodal/formula.hpp"
#include "submodal/model.hpp"

namespace submodal {

/// A model whose tables may have holes: -1 (or rel value 2) means
/// "not decided yet". Used by the backtracking model finder. Every table
/// cell has a linear id (constants, then function entries, then relation
/// entries) so searches can watch the cell that blocks a constraint.
struct PartialModel {
  explicit PartialModel(const Signature& sig, int size);

  int size = 0;
  std::vector<std::vector<std::int8_t>> rel;  // 0, 1, or -1 per tuple rank
  std::vector<std::vector<std::int32_t>> fun;  // element or -1
  std::vector<std::int32_t> cst;               // element or -1

  std::vector<std::int32_t> fun_base, rel_base;  // cell-id offsets
  std::int32_t total_cells = 0;

  std::int32_t const_cell(int idx) const { return idx; }
  std::int32_t fun_cell(int idx, std::size_t rank) const {
    return fun_base[idx] + static_cast<std::int32_t>(rank);
  }
  std::int32_t rel_cell(int idx, std::size_t rank) const {
    return rel_base[idx] + static_cast<std::int32_t>(rank);
  }
};

/// Three-valued truth: known false, known true, or undecided.
enum class Truth3 : std::int8_t { False = 0, True = 1, Unknown = 2 };

/// A formula lowered to flat arrays against a fixed signature: symbols
/// resolved to table indices, variables to environment slots. Evaluation is
/// a tight recursive interpreter, the workhorse behind every exhaustive
/// sweep. Quantifiers range over a domain bitmask, which is how submodel
/// satisfaction is evaluated without materializing the restriction.
class CompiledFormula {
 public:
  CompiledFormula(const Formula& f, const Signature& sig);

  /// Free variables in sorted order; they own slots 0..k-1.
  const std::vector<std::string>& free_variables() const { return free_; }

  /// Evaluate with quantifiers ranging over the full universe.
  bool eval(const FiniteModel& m, const Assignment& a) const;

  /// Sentence evaluation over the full universe.
  bool eval_closed(const FiniteModel& m) const;

  /// Sentence evaluation with quantifiers restricted to `domain`. When
  /// `domain` is closed under the model's functions and constants this is
  /// exactly satisfaction in the induced submodel.
  bool eval_closed_on(const FiniteModel& m, std::uint64_t domain) const;

  /// Evaluation with an explicit environment (slot -> element). `env` must
  /// have room for slot_count() entries; free-variable slots must be bound.
  bool eval_env(const FiniteModel& m, std::uint64_t domain,
                std::int32_t* env) const;

  /// Three-valued evaluation on a partial model (full domain). Sound for
  /// pruning: a False result holds in every completion of the tables. When
  /// `blocked` is given and the result is Unknown, it receives the id of
  /// the first undecided cell the evaluation read; since filling cells only
  /// adds information, the verdict cannot change until that cell is filled.
  Truth3 eval3(const PartialModel& m, std::int32_t* env,
               std::int32_t* blocked = nullptr) const;
  Truth3 eval3_closed(const PartialModel& m) const;

  int slot_count() const { return next_slot_; }

  struct TermInstr {
    TermKind kind;
    std::int32_t sym;  // slot, constant index, or function index
    std::int32_t args_begin, args_end;  // into term_args()
  };
  struct NodeInstr {
    FormulaKind kind;
    std::int32_t sym;  // predicate index for PredAtom
    std::int32_t begin, end;  // children (or atom term indices)
    std::int32_t slots_begin, slots_end;  // quantifier slots
  };

  const std::vector<TermInstr>& term_instrs() const { return terms_; }
  const std::vector<NodeInstr>& node_instrs() const { return nodes_; }
  std::int32_t root() const { return root_; }

 private:
  std::int32_t compile_term(const Term& t,
                            std::vector<std::pair<std::string, int>>& scope);
  std::int32_t compile_node(const Formula& f,
                            std::vector<std::pair<std::string, int>>& scope);

  const Signature* sig_;
  std::vector<std::string> free_;
  std::vector<TermInstr> terms_;
  std::vector<std::int32_t> term_args_;
  std::vector<NodeInstr> nodes_;
  std::vector<std::int32_t> node_children_;
  std::vector<std::int32_t> slots_;
  std::int32_t root_ = -1;
  int next_slot_ = 0;

  std::int32_t eval_term(const FiniteModel& m, std::int32_t idx,
                         const std::int32_t* env) const;
  bool eval_node(const FiniteModel& m, std::uint64_t domain, std::int32_t idx,
                 std::int32_t* env) const;
  std::int32_t eval_term3(const PartialModel& m, std::int32_t idx,
                          const std::int32_t* env, std::int32_t* blocked) const;
  Truth3 eval_node3(const PartialModel& m, std::int32_t idx, std::int32_t* env,
                    std::int32_t* blocked) const;

  friend class CompiledAccess;
};

}  // namespace submodal

#endif  // SUBMODAL_COMPILED_HPP
