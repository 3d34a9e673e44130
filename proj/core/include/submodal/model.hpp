// model.hpp
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

#ifndef SUBMODAL_MODEL_HPP
#define SUBMODAL_MODEL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "submodal/formula.hpp"
#include "submodal/signature.hpp"

namespace submodal {

using Assignment = std::map<std::string, int>;

/// A finite structure with universe {0..n-1}. Relations and function tables
/// are stored flat, indexed by the row-major rank of the argument tuple, so
/// membership tests are O(arity) and whole-table enumeration mutates bits in
/// place. Symbols are addressed by their position in the signature's sorted
/// symbol maps; the by-name accessors resolve positions on each call and are
/// meant for construction and I/O, not inner loops.
class FiniteModel {
 public:
  FiniteModel(Signature sig, int size);

  const Signature& signature() const { return sig_; }
  int size() const { return size_; }
  std::uint64_t full_domain() const {
    return size_ == 64 ? ~0ULL : (1ULL << size_) - 1;
  }

  // Tuple ranks are row-major: rank((t0,..,tk)) = ((t0*n)+t1)*n+...
  std::size_t rank(const std::vector<int>& tuple) const;
  std::vector<int> unrank(std::size_t r, int arity) const;

  int pred_count() const { return static_cast<int>(rel_.size()); }
  int fun_count() const { return static_cast<int>(fun_.size()); }
  int const_count() const { return static_cast<int>(cst_.size()); }

  int pred_index(const std::string& name) const;
  int fun_index(const std::string& name) const;
  int const_index(const std::string& name) const;

  const std::string& pred_name(int idx) const { return pred_names_[idx]; }
  const std::string& fun_name(int idx) const { return fun_names_[idx]; }
  const std::string& const_name(int idx) const { return const_names_[idx]; }
  int pred_arity(int idx) const { return pred_arities_[idx]; }
  int fun_arity(int idx) const { return fun_arities_[idx]; }

  std::vector<std::uint8_t>& rel_table(int idx) { return rel_[idx]; }
  const std::vector<std::uint8_t>& rel_table(int idx) const { return rel_[idx]; }
  std::vector<std::int32_t>& fun_table(int idx) { return fun_[idx]; }
  const std::vector<std::int32_t>& fun_table(int idx) const { return fun_[idx]; }
  std::int32_t& const_value(int idx) { return cst_[idx]; }
  std::int32_t const_value(int idx) const { return cst_[idx]; }

  bool rel_contains(const std::string& pred, const std::vector<int>& tuple) const;
  void set_rel(const std::string& pred, const std::vector<int>& tuple, bool in);
  int fun_value(const std::string& fn, const std::vector<int>& tuple) const;
  void set_fun(const std::string& fn, const std::vector<int>& tuple, int value);
  int const_value(const std::string& name) const;
  void set_const(const std::string& name, int value);

  bool operator==(const FiniteModel& other) const;

 private:
  void check_range(int e) const;

  Signature sig_;
  int size_;
  std::vector<std::string> pred_names_, fun_names_, const_names_;
  std::vector<int> pred_arities_, fun_arities_;
  std::vector<std::vector<std::uint8_t>> rel_;
  std::vector<std::vector<std::int32_t>> fun_;
  std::vector<std::int32_t> cst_;
};

/// Tarski satisfaction. The assignment must cover every free variable of
/// `f`; an uncovered variable raises std::invalid_argument. The empty
/// conjunction holds and the empty disjunction fails.
bool evaluate(const FiniteModel& m, const Formula& f, const Assignment& a = {});

/// True when `subset` (a bit per element, nonempty) contains every constant
/// value and is closed under every function table.
bool is_closed_subset(const FiniteModel& m, std::uint64_t subset);

/// The induced structure on the closed subset, relabeled to {0..k-1} in
/// increasing element order, plus the inclusion map (new index -> old
/// element).
std::pair<FiniteModel, std::vector<int>> restrict_to(const FiniteModel& m,
                                                     std::uint64_t subset);

/// Least subset containing `seeds` and all constant values, closed under all
/// function tables (fixpoint iteration). Seeds must be a nonempty subset of
/// the universe.
std::uint64_t generated_closure(const FiniteModel& m,
                                const std::vector<int>& seeds);

/// The submodel generated by `seeds`, with the inclusion map.
std::pair<FiniteModel, std::vector<int>> generated_submodel(
    const FiniteModel& m, const std::vector<int>& seeds);

/// Image of the model under a permutation of the universe:
/// relabeled R(pi(t)) iff R(t), f(pi(t)) = pi(f(t)), c = pi(c).
FiniteModel relabel(const FiniteModel& m, const std::vector<int>& perm);

/// Lexicographically least relabeling (by rendered table content). Only used
/// for reporting isomorphism-reduced counts, never for correctness.
FiniteModel canonical_form(const FiniteModel& m);

}  // namespace submodal

#endif  // SUBMODAL_MODEL_HPP
