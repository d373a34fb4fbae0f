/* Copyright 2026 The holq Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "holq/parser.hpp"

#include "holq/error.hpp"
#include "parse_internal.hpp"

namespace holq {

// Only the directive openers are reserved outright; the check sublanguage
// words (sizes, cap, atoms, the check kinds) are recognized contextually so
// ordinary theories may reuse them as term names.
bool is_reserved_word(const std::string& s) {
  static const std::set<std::string> kReserved = {
      "type", "const", "def", "axiom", "include", "infix", "binder", "check"};
  return kReserved.count(s) > 0;
}

// ---------------------------------------------------------------------------
// Types

static TypePtr parse_btype(Cursor& c) {
  if (c.at(Token::Kind::LParen)) {
    c.next();
    TypePtr t = parse_type_at(c);
    c.expect(Token::Kind::RParen, "')'");
    return t;
  }
  if (c.at(Token::Kind::TyVar)) return ty_var(c.next().text);
  if (c.at(Token::Kind::Ident)) {
    if (is_reserved_word(c.peek().text)) c.fail("expected a type");
    return ty_base(c.next().text);
  }
  c.fail("expected a type");
}

TypePtr parse_type_at(Cursor& c) {
  TypePtr left = parse_btype(c);
  if (c.at_op("->")) {
    c.next();
    return ty_arrow(left, parse_type_at(c));
  }
  return left;
}

// ---------------------------------------------------------------------------
// Terms

namespace {

struct TermParser {
  Cursor& c;
  const TheoryEnv& env;
  bool strict;
  std::vector<std::pair<std::string, TypePtr>> scope;  // binder stack

  TermPtr resolve(const Token& tok) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == tok.text) return mk_var(tok.text, it->second);
    if (env.sig.find_const(tok.text)) return mk_const(tok.text);
    if (strict)
      throw parse_error("unknown identifier '" + tok.text + "'", tok.line, tok.col);
    return mk_var(tok.text);
  }

  // '\' x ':' type '.' term   or   BINDER x ':' type '.' term
  TermPtr parse_binding(const std::string& binder_const) {
    const Token& name = c.expect(Token::Kind::Ident, "bound variable name");
    c.expect(Token::Kind::Colon, "':' and a type after the bound variable");
    TypePtr ty = parse_type_at(c);
    c.expect(Token::Kind::Dot, "'.' after the binder type");
    scope.emplace_back(name.text, ty);
    TermPtr body = parse_term(0);
    scope.pop_back();
    TermPtr lam = mk_lam(name.text, ty, body);
    if (binder_const.empty()) return lam;
    return mk_app(mk_const(binder_const), lam);
  }

  bool starts_binding() {
    // IDENT that names a declared binder, followed by IDENT ':'
    if (!c.at(Token::Kind::Ident)) return false;
    if (!env.notations.is_binder(c.peek().text)) return false;
    return c.peek(1).kind == Token::Kind::Ident &&
           c.peek(2).kind == Token::Kind::Colon;
  }

  bool atom_start() {
    if (c.at(Token::Kind::LParen)) return true;
    if (c.at(Token::Kind::Ident)) return !is_reserved_word(c.peek().text);
    return false;
  }

  TermPtr parse_atom() {
    if (c.at(Token::Kind::LParen)) {
      c.next();
      TermPtr t = parse_term(0);
      if (c.at(Token::Kind::Colon)) {  // ascription
        c.next();
        TypePtr ty = parse_type_at(c);
        c.expect(Token::Kind::RParen, "')' after ascription");
        return mk_ascribe(t, ty);
      }
      c.expect(Token::Kind::RParen, "')'");
      return t;
    }
    if (c.at(Token::Kind::Ident)) return resolve(c.next());
    c.fail("expected a term");
  }

  TermPtr parse_app() {
    TermPtr t = parse_atom();
    while (atom_start() && !starts_binding()) t = mk_app(t, parse_atom());
    return t;
  }

  // Precedence climbing.  '='/'!=' are builtin at kEqPrec, left-assoc;
  // declared operators are right-assoc at their declared precedence.
  TermPtr parse_term(int min_prec) {
    if (c.at(Token::Kind::Lambda)) {
      c.next();
      return parse_binding("");
    }
    if (starts_binding()) {
      std::string b = c.next().text;
      return parse_binding(b);
    }
    TermPtr left = parse_app();
    for (;;) {
      if (!c.at(Token::Kind::Op)) break;
      const std::string& sym = c.peek().text;
      if (sym == "=" || sym == "!=") {
        if (kEqPrec < min_prec) break;
        c.next();
        TermPtr rhs = parse_term(kEqPrec + 1);
        left = mk_app(mk_const(sym == "=" ? "Q" : "D"), left, rhs);
        continue;
      }
      const InfixSpec* spec = env.notations.find_symbol(sym);
      if (!spec || spec->prec < min_prec) break;
      c.next();
      TermPtr rhs = parse_term(spec->prec);
      left = mk_app(mk_const(spec->const_name), left, rhs);
    }
    return left;
  }
};

}  // namespace

TermPtr parse_term_at(Cursor& c, const TheoryEnv& env, bool strict) {
  TermParser p{c, env, strict, {}};
  return p.parse_term(0);
}

TypePtr parse_type(const std::string& src) {
  auto toks = lex(src);
  Cursor c{&toks};
  TypePtr t = parse_type_at(c);
  if (!c.at(Token::Kind::Eof)) c.fail("trailing input after type");
  return t;
}

TermPtr parse_term(const std::string& src, const TheoryEnv& env, bool strict) {
  auto toks = lex(src);
  Cursor c{&toks};
  TermPtr t = parse_term_at(c, env, strict);
  if (!c.at(Token::Kind::Eof)) c.fail("trailing input after term");
  return t;
}

TermPtr parse_term(const std::string& src) {
  return parse_term(src, TheoryEnv::kernel(), false);
}

}  // namespace holq
