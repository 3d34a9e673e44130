// signature.cpp
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

#include "submodal/signature.hpp"

#include <stdexcept>

namespace submodal {

void Signature::check_fresh(const std::string& name) const {
  if (declares(name))
    throw std::invalid_argument("duplicate symbol: " + name);
  if (name.empty()) throw std::invalid_argument("empty symbol name");
}

Signature& Signature::add_predicate(const std::string& name, int arity) {
  check_fresh(name);
  if (arity < 1)
    throw std::invalid_argument("predicate arity must be >= 1: " + name);
  predicates_[name] = arity;
  return *this;
}

Signature& Signature::add_function(const std::string& name, int arity) {
  check_fresh(name);
  if (arity < 1)
    throw std::invalid_argument("function arity must be >= 1: " + name);
  functions_[name] = arity;
  return *this;
}

Signature& Signature::add_constant(const std::string& name) {
  check_fresh(name);
  constants_.insert(name);
  return *this;
}

int Signature::predicate_arity(const std::string& name) const {
  auto it = predicates_.find(name);
  if (it == predicates_.end())
    throw std::invalid_argument("unknown predicate: " + name);
  return it->second;
}

int Signature::function_arity(const std::string& name) const {
  auto it = functions_.find(name);
  if (it == functions_.end())
    throw std::invalid_argument("unknown function: " + name);
  return it->second;
}

bool Signature::purely_monadic() const {
  if (!relational()) return false;
  for (const auto& [name, arity] : predicates_)
    if (arity != 1) return false;
  return true;
}

Signature Signature::with_equality() const {
  Signature s = *this;
  s.equality_allowed_ = true;
  return s;
}

}  // namespace submodal
