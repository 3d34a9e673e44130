// parse.hpp
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

#ifndef SUBMODAL_PARSE_HPP
#define SUBMODAL_PARSE_HPP

#include <stdexcept>
#include <string>

#include "submodal/formula.hpp"
#include "submodal/model.hpp"
#include "submodal/signature.hpp"

namespace submodal {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Signature files (.sig): one declaration per line.
///   pred NAME/ARITY
///   fun NAME/ARITY
///   const NAME
///   equality on|off
/// Blank lines and lines starting with '#' are ignored.
Signature parse_signature(const std::string& text);

/// Formula files (.fml): one s-expression, whitespace-insensitive.
///   formula ::= atom | (not f) | ((and|or) f*) | ((exists|forall) (v+) f)
///   atom    ::= (predname term*) | (= term term)
///   term    ::= var | constname | (funname term+)
/// Undeclared identifiers in term position are variables. Equality atoms
/// are rejected when the signature has equality off, quantifier blocks
/// must be nonempty, and all symbols must be declared with the right arity.
Formula parse_formula(const std::string& text, const Signature& sig);

/// Model files (.mdl): universe line first, then tables.
///   universe N
///   pred NAME = {(a,b) (c,d) ...}
///   fun NAME: (a,b)=v (c,d)=w ...
///   const NAME = v
/// Function tables must be total; duplicate entries and out-of-range
/// elements are errors.
FiniteModel parse_model(const std::string& text, const Signature& sig);

}  // namespace submodal

#endif  // SUBMODAL_PARSE_HPP
