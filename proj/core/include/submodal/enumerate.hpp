// enumerate.hpp
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

#ifndef SUBMODAL_ENUMERATE_HPP
#define SUBMODAL_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "submodal/formula.hpp"
#include "submodal/model.hpp"
#include "submodal/signature.hpp"

namespace submodal {

// Streams are pure and restartable: identical calls yield identical
// sequences. Every callback may stop the stream early by returning false;
// the enumerator then returns false itself. Callbacks receive a reference
// to an in-place mutated value and must copy what they want to keep.

/// Nonempty subsets of the universe containing all constant values and
/// closed under all function tables, in ascending bitmask order.
bool for_each_subuniverse(const FiniteModel& m,
                          const std::function<bool(std::uint64_t)>& fn);
std::vector<std::uint64_t> enumerate_subuniverses(const FiniteModel& m);

/// All models with universe {0..m-1}, |A| <= m <= k, whose restriction to
/// {0..|A|-1} is exactly `m`: tuples over old elements keep their membership,
/// function tables keep their old entries (in particular old tuples still
/// land in the old universe), constants are unchanged. Everything touching a
/// new element is free. Ordered by m, then slot-lexicographically.
bool for_each_extension(const FiniteModel& m, int k,
                        const std::function<bool(const FiniteModel&)>& fn);
std::vector<FiniteModel> enumerate_extensions(const FiniteModel& m, int k);

/// Is some extension within the bound a model of the sentence? Agrees with
/// scanning for_each_extension, but fills the fresh cells by backtracking
/// and rejects partial fillings against the universal part of the sentence,
/// which keeps functional signatures feasible at bounds the raw product
/// space puts far out of reach.
bool exists_extension_satisfying(const FiniteModel& m, int k,
                                 const Formula& phi);

/// All models of `sig` with universe {0..n-1} in slot-lexicographic order
/// (constants, then function tables, then relations, symbols sorted, tuples
/// row-major). With `prune`, exactly the models satisfying it are emitted,
/// found by backtracking table-filling that rejects partial tables against
/// the ground instances of prune's universal part.
bool for_each_model(const Signature& sig, int n, const Formula* prune,
                    const std::function<bool(const FiniteModel&)>& fn);
std::vector<FiniteModel> enumerate_models(const Signature& sig, int n,
                                          const Formula* prune = nullptr);

/// Number of models for each size in [1, max_size], prune applied.
std::vector<std::uint64_t> count_models(const Signature& sig, int max_size,
                                        const Formula* prune = nullptr);

/// Size of the raw model space (product of table-cell radices). Throws when
/// it would not fit in 62 bits.
std::uint64_t model_space_size(const Signature& sig, int n);

/// Raw enumeration restricted to the index range [lo, hi) of the
/// slot-lexicographic order. Model i here equals the i-th model of
/// for_each_model without prune, which is what lets sweeps partition the
/// space across workers and still merge deterministically.
bool for_each_model_range(const Signature& sig, int n, std::uint64_t lo,
                          std::uint64_t hi,
                          const std::function<bool(const FiniteModel&)>& fn);

}  // namespace submodal

#endif  // SUBMODAL_ENUMERATE_HPP
