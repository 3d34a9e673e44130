// parse.cpp
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

#include "submodal/parse.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace submodal {

namespace {

std::vector<std::pair<int, std::string>> logical_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    std::string body = line.substr(a, b - a + 1);
    if (body[0] == '#') continue;
    out.emplace_back(lineno, body);
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool is_reserved(const std::string& word) {
  return word == "and" || word == "or" || word == "not" || word == "exists" ||
         word == "forall" || word == "=";
}

void check_symbol_name(const std::string& name, int line) {
  if (is_reserved(name))
    throw ParseError("reserved word used as symbol name: " + name, line);
  for (char c : name)
    if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c)))
      throw ParseError("bad character in symbol name: " + name, line);
}

}  // namespace

Signature parse_signature(const std::string& text) {
  Signature sig;
  for (const auto& [lineno, body] : logical_lines(text)) {
    auto toks = split_ws(body);
    try {
      if (toks[0] == "pred" || toks[0] == "fun") {
        if (toks.size() != 2)
          throw ParseError("expected '" + toks[0] + " NAME/ARITY'", lineno);
        std::size_t slash = toks[1].rfind('/');
        if (slash == std::string::npos || slash == 0 ||
            slash + 1 == toks[1].size())
          throw ParseError("expected NAME/ARITY, got '" + toks[1] + "'", lineno);
        std::string name = toks[1].substr(0, slash);
        check_symbol_name(name, lineno);
        int arity = 0;
        for (char c : toks[1].substr(slash + 1)) {
          if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("bad arity in '" + toks[1] + "'", lineno);
          arity = arity * 10 + (c - '0');
          if (arity > 6) throw ParseError("arity too large (max 6)", lineno);
        }
        if (toks[0] == "pred")
          sig.add_predicate(name, arity);
        else
          sig.add_function(name, arity);
      } else if (toks[0] == "const") {
        if (toks.size() != 2) throw ParseError("expected 'const NAME'", lineno);
        check_symbol_name(toks[1], lineno);
        sig.add_constant(toks[1]);
      } else if (toks[0] == "equality") {
        if (toks.size() != 2 || (toks[1] != "on" && toks[1] != "off"))
          throw ParseError("expected 'equality on' or 'equality off'", lineno);
        sig.set_equality(toks[1] == "on");
      } else {
        throw ParseError("unknown declaration: " + toks[0], lineno);
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return sig;
}

namespace {

// S-expression tokenizer: '(', ')', and atoms (runs of anything else).
struct Token {
  std::string text;  // empty text means paren
  char paren = 0;
  int line = 1;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(' || c == ')') {
      out.push_back({"", c, line});
      ++i;
    } else {
      std::size_t j = i;
      while (j < text.size() && text[j] != '(' && text[j] != ')' &&
             !std::isspace(static_cast<unsigned char>(text[j])))
        ++j;
      out.push_back({text.substr(i, j - i), 0, line});
      i = j;
    }
  }
  return out;
}

class FormulaParser {
 public:
  FormulaParser(std::vector<Token> toks, const Signature& sig)
      : toks_(std::move(toks)), sig_(sig) {}

  Formula parse() {
    if (toks_.empty()) throw ParseError("empty input", 1);
    Formula f = formula();
    if (pos_ != toks_.size())
      throw ParseError("trailing input after formula", peek().line);
    return f;
  }

 private:
  const Token& peek() const {
    if (pos_ >= toks_.size())
      throw ParseError("unexpected end of input", toks_.back().line);
    return toks_[pos_];
  }
  Token next() {
    Token t = peek();
    ++pos_;
    return t;
  }
  void expect(char paren) {
    Token t = next();
    if (t.paren != paren)
      throw ParseError(std::string("expected '") + paren + "'", t.line);
  }

  Term term() {
    Token t = next();
    if (t.paren == ')') throw ParseError("unexpected ')'", t.line);
    if (t.paren == '(') {
      Token head = next();
      if (head.paren) throw ParseError("expected function name", head.line);
      if (!sig_.has_function(head.text))
        throw ParseError(sig_.declares(head.text)
                             ? "not a function symbol: " + head.text
                             : "unknown symbol: " + head.text,
                         head.line);
      std::vector<Term> args;
      while (peek().paren != ')') args.push_back(term());
      expect(')');
      int arity = sig_.function_arity(head.text);
      if (args.size() != static_cast<std::size_t>(arity))
        throw ParseError("arity mismatch for " + head.text + ": expected " +
                             std::to_string(arity) + ", got " +
                             std::to_string(args.size()),
                         head.line);
      return Term::apply(head.text, std::move(args));
    }
    if (is_reserved(t.text))
      throw ParseError("reserved word in term position: " + t.text, t.line);
    if (sig_.has_constant(t.text)) return Term::constant(t.text);
    if (sig_.declares(t.text))
      throw ParseError("symbol cannot stand alone as a term: " + t.text, t.line);
    return Term::variable(t.text);
  }

  Formula formula() {
    Token open = next();
    if (open.paren != '(')
      throw ParseError("expected '(' to start a formula", open.line);
    Token head = next();
    if (head.paren == ')') throw ParseError("empty form", head.line);
    if (head.paren == '(')
      throw ParseError("expected an operator or predicate name", head.line);

    const std::string& op = head.text;
    if (op == "not") {
      Formula f = formula();
      expect(')');
      return Formula::negation(std::move(f));
    }
    if (op == "and" || op == "or") {
      std::vector<Formula> fs;
      while (peek().paren != ')') fs.push_back(formula());
      expect(')');
      return op == "and" ? Formula::conj(std::move(fs))
                         : Formula::disj(std::move(fs));
    }
    if (op == "exists" || op == "forall") {
      expect('(');
      std::vector<std::string> vars;
      while (peek().paren != ')') {
        Token v = next();
        if (v.paren) throw ParseError("expected variable name", v.line);
        if (is_reserved(v.text))
          throw ParseError("reserved word as variable: " + v.text, v.line);
        if (sig_.declares(v.text))
          throw ParseError("declared symbol used as variable: " + v.text,
                           v.line);
        vars.push_back(v.text);
      }
      expect(')');
      if (vars.empty()) throw ParseError("empty quantifier block", head.line);
      Formula body = formula();
      expect(')');
      try {
        return op == "exists" ? Formula::exists(std::move(vars), std::move(body))
                              : Formula::forall(std::move(vars), std::move(body));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), head.line);
      }
    }
    if (op == "=") {
      if (!sig_.equality_allowed())
        throw ParseError("equality atom in equality-free signature", head.line);
      Term lhs = term();
      Term rhs = term();
      expect(')');
      return Formula::eq(std::move(lhs), std::move(rhs));
    }
    if (sig_.has_predicate(op)) {
      std::vector<Term> ts;
      while (peek().paren != ')') ts.push_back(term());
      expect(')');
      int arity = sig_.predicate_arity(op);
      if (ts.size() != static_cast<std::size_t>(arity))
        throw ParseError("arity mismatch for " + op + ": expected " +
                             std::to_string(arity) + ", got " +
                             std::to_string(ts.size()),
                         head.line);
      return Formula::pred(op, std::move(ts));
    }
    throw ParseError(sig_.declares(op) ? "not a predicate symbol: " + op
                                       : "unknown symbol: " + op,
                     head.line);
  }

  std::vector<Token> toks_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(const std::string& text, const Signature& sig) {
  return FormulaParser(tokenize(text), sig).parse();
}

namespace {

// Parses "(a,b,c)" starting at s[i] (whitespace already possible around
// every token); returns the tuple and advances i past the ')'.
std::vector<int> parse_tuple(const std::string& s, std::size_t& i, int lineno) {
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip();
  if (i >= s.size() || s[i] != '(')
    throw ParseError("expected '(' to start a tuple", lineno);
  ++i;
  std::vector<int> tuple;
  while (true) {
    skip();
    if (i < s.size() && s[i] == ')') {
      ++i;
      break;
    }
    int v = 0;
    bool any = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      ++i;
      any = true;
    }
    if (!any) throw ParseError("expected an element number in tuple", lineno);
    tuple.push_back(v);
    skip();
    if (i < s.size() && s[i] == ',') ++i;
  }
  if (tuple.empty()) throw ParseError("empty tuple", lineno);
  return tuple;
}

int parse_number(const std::string& s, std::size_t& i, int lineno) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  int v = 0;
  bool any = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    v = v * 10 + (s[i] - '0');
    ++i;
    any = true;
  }
  if (!any) throw ParseError("expected a number", lineno);
  return v;
}

}  // namespace

FiniteModel parse_model(const std::string& text, const Signature& sig) {
  auto lines = logical_lines(text);
  if (lines.empty()) throw ParseError("empty model file", 1);
  std::optional<FiniteModel> model;
  std::set<std::string> seen_preds, seen_consts;
  std::map<std::string, std::vector<bool>> fun_filled;

  for (const auto& [lineno, body] : lines) {
    std::istringstream in(body);
    std::string kw;
    in >> kw;
    if (kw == "universe") {
      if (model) throw ParseError("duplicate universe line", lineno);
      int n;
      if (!(in >> n) || n < 1)
        throw ParseError("universe size must be a positive integer", lineno);
      std::string rest;
      if (in >> rest) throw ParseError("trailing input after size", lineno);
      model.emplace(sig, n);
      for (const auto& [fname, arity] : sig.functions()) {
        std::size_t count = 1;
        for (int i = 0; i < arity; ++i) count *= static_cast<std::size_t>(n);
        fun_filled[fname].assign(count, false);
      }
      continue;
    }
    if (!model) throw ParseError("universe line must come first", lineno);
    int n = model->size();
    auto check_elem = [&](int e) {
      if (e < 0 || e >= n)
        throw ParseError("element out of range: " + std::to_string(e), lineno);
    };

    if (kw == "pred") {
      std::string name;
      in >> name;
      if (!sig.has_predicate(name))
        throw ParseError("unknown predicate: " + name, lineno);
      if (!seen_preds.insert(name).second)
        throw ParseError("duplicate declaration for predicate " + name, lineno);
      std::string rest;
      std::getline(in, rest);
      std::size_t i = 0;
      auto skip = [&] {
        while (i < rest.size() &&
               std::isspace(static_cast<unsigned char>(rest[i])))
          ++i;
      };
      skip();
      if (i >= rest.size() || rest[i] != '=')
        throw ParseError("expected '=' after predicate name", lineno);
      ++i;
      skip();
      if (i >= rest.size() || rest[i] != '{')
        throw ParseError("expected '{'", lineno);
      ++i;
      int arity = sig.predicate_arity(name);
      while (true) {
        skip();
        if (i >= rest.size())
          throw ParseError("unterminated tuple set", lineno);
        if (rest[i] == '}') {
          ++i;
          break;
        }
        auto tuple = parse_tuple(rest, i, lineno);
        if (tuple.size() != static_cast<std::size_t>(arity))
          throw ParseError("tuple arity mismatch for " + name, lineno);
        for (int e : tuple) check_elem(e);
        if (model->rel_contains(name, tuple))
          throw ParseError("duplicate entry in " + name, lineno);
        model->set_rel(name, tuple, true);
      }
      skip();
      if (i < rest.size()) throw ParseError("trailing input", lineno);
    } else if (kw == "fun") {
      std::string name;
      in >> name;
      if (!name.empty() && name.back() == ':') name.pop_back();
      if (!sig.has_function(name))
        throw ParseError("unknown function: " + name, lineno);
      std::string rest;
      std::getline(in, rest);
      std::size_t i = 0;
      // allow "fun f : ..." with a detached colon
      while (i < rest.size() &&
             (std::isspace(static_cast<unsigned char>(rest[i])) ||
              rest[i] == ':'))
        ++i;
      int arity = sig.function_arity(name);
      auto& filled = fun_filled[name];
      while (true) {
        while (i < rest.size() &&
               std::isspace(static_cast<unsigned char>(rest[i])))
          ++i;
        if (i >= rest.size()) break;
        auto tuple = parse_tuple(rest, i, lineno);
        if (tuple.size() != static_cast<std::size_t>(arity))
          throw ParseError("tuple arity mismatch for " + name, lineno);
        for (int e : tuple) check_elem(e);
        while (i < rest.size() &&
               std::isspace(static_cast<unsigned char>(rest[i])))
          ++i;
        if (i >= rest.size() || rest[i] != '=')
          throw ParseError("expected '=' in function entry", lineno);
        ++i;
        int value = parse_number(rest, i, lineno);
        check_elem(value);
        std::size_t r = model->rank(tuple);
        if (filled[r])
          throw ParseError("duplicate entry in " + name, lineno);
        filled[r] = true;
        model->set_fun(name, tuple, value);
      }
    } else if (kw == "const") {
      std::string name;
      in >> name;
      if (!sig.has_constant(name))
        throw ParseError("unknown constant: " + name, lineno);
      if (!seen_consts.insert(name).second)
        throw ParseError("duplicate declaration for constant " + name, lineno);
      std::string rest;
      std::getline(in, rest);
      std::size_t i = 0;
      while (i < rest.size() &&
             (std::isspace(static_cast<unsigned char>(rest[i])) ||
              rest[i] == '='))
        ++i;
      std::size_t before = i;
      int value = parse_number(rest, i, lineno);
      if (before == i) throw ParseError("expected a value", lineno);
      if (value < 0 || value >= n)
        throw ParseError("element out of range: " + std::to_string(value),
                         lineno);
      model->set_const(name, value);
      while (i < rest.size() &&
             std::isspace(static_cast<unsigned char>(rest[i])))
        ++i;
      if (i < rest.size()) throw ParseError("trailing input", lineno);
    } else {
      throw ParseError("unknown declaration: " + kw, lineno);
    }
  }

  if (!model) throw ParseError("missing universe line", 1);
  int last_line = lines.back().first;
  for (const auto& [fname, filled] : fun_filled)
    for (std::size_t r = 0; r < filled.size(); ++r)
      if (!filled[r]) {
        std::ostringstream msg;
        msg << "table not total: " << fname << " missing (";
        auto tuple = model->unrank(r, sig.function_arity(fname));
        for (std::size_t i = 0; i < tuple.size(); ++i) {
          if (i) msg << ',';
          msg << tuple[i];
        }
        msg << ')';
        throw ParseError(msg.str(), last_line);
      }
  for (const auto& cname : sig.constants())
    if (!seen_consts.count(cname))
      throw ParseError("missing value for constant " + cname, last_line);
  return *model;
}

}  // namespace submodal
