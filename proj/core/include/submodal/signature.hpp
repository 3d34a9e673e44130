// signature.hpp
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

#ifndef SUBMODAL_SIGNATURE_HPP
#define SUBMODAL_SIGNATURE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

namespace submodal {

/// A first-order signature: predicate, function, and constant symbols.
/// Symbol names are pairwise distinct across the three kinds. Equality is a
/// logical symbol gated by `equality_allowed` rather than a declared
/// predicate, so a signature can be "without equality".
class Signature {
 public:
  Signature() = default;

  // Each adder rejects duplicate names (across all three kinds) and, for
  // predicates and functions, arities < 1. Constants play the role of
  // 0-ary functions but are declared separately.
  Signature& add_predicate(const std::string& name, int arity);
  Signature& add_function(const std::string& name, int arity);
  Signature& add_constant(const std::string& name);
  Signature& set_equality(bool allowed) {
    equality_allowed_ = allowed;
    return *this;
  }

  const std::map<std::string, int>& predicates() const { return predicates_; }
  const std::map<std::string, int>& functions() const { return functions_; }
  const std::set<std::string>& constants() const { return constants_; }
  bool equality_allowed() const { return equality_allowed_; }

  bool has_predicate(const std::string& name) const {
    return predicates_.count(name) != 0;
  }
  bool has_function(const std::string& name) const {
    return functions_.count(name) != 0;
  }
  bool has_constant(const std::string& name) const {
    return constants_.count(name) != 0;
  }
  bool declares(const std::string& name) const {
    return has_predicate(name) || has_function(name) || has_constant(name);
  }

  int predicate_arity(const std::string& name) const;
  int function_arity(const std::string& name) const;

  /// Number of function-and-constant symbols. Submodel universes are
  /// exactly the nonempty subsets closed under all of these.
  std::size_t fnc_size() const { return functions_.size() + constants_.size(); }

  /// True when there are no function or constant symbols at all.
  bool relational() const { return fnc_size() == 0; }

  /// Only unary predicates, no functions, no constants.
  bool purely_monadic() const;

  /// Same symbols with equality switched on. Sentence builders produce
  /// output over this signature even when the input one lacks equality.
  Signature with_equality() const;

  bool operator==(const Signature& other) const = default;

 private:
  void check_fresh(const std::string& name) const;

  std::map<std::string, int> predicates_;
  std::map<std::string, int> functions_;
  std::set<std::string> constants_;
  bool equality_allowed_ = false;
};

}  // namespace submodal

#endif  // SUBMODAL_SIGNATURE_HPP
