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

// Shared token stream for the term grammar and the theory-file directives.
// Not installed.

#ifndef HOLQ_SRC_LEXER_HPP
#define HOLQ_SRC_LEXER_HPP

#include <string>
#include <vector>

#include "holq/error.hpp"

namespace holq {

struct Token {
  enum class Kind {
    Ident,   // [A-Za-z_][A-Za-z0-9_']*
    TyVar,   // 'ident
    Int,
    Str,     // "..."
    Op,      // maximal run of !$%&*+-/<=>?@^|~
    LParen, RParen, LBrace, RBrace,
    Lambda,  // backslash
    Dot, Colon, ColonEq, Comma,
    Eof
  };
  Kind kind;
  std::string text;
  int line, col;
};

inline bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
inline bool ident_char(char c) {
  return ident_start(c) || (c >= '0' && c <= '9') || c == '\'';
}
inline bool op_char(char c) {
  return std::string("!$%&*+-/<=>?@^|~").find(c) != std::string::npos;
}

std::vector<Token> lex(const std::string& src);

// Token cursor with 1-token convenience operations.
struct Cursor {
  const std::vector<Token>* toks;
  std::size_t pos = 0;

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos + ahead;
    return i < toks->size() ? (*toks)[i] : toks->back();
  }
  const Token& next() {
    const Token& t = peek();
    if (t.kind != Token::Kind::Eof) ++pos;
    return t;
  }
  bool at(Token::Kind k) const { return peek().kind == k; }
  bool at_op(const std::string& s) const {
    return peek().kind == Token::Kind::Op && peek().text == s;
  }
  bool at_ident(const std::string& s) const {
    return peek().kind == Token::Kind::Ident && peek().text == s;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw parse_error(msg + (t.kind == Token::Kind::Eof
                                 ? " (at end of input)"
                                 : " (at '" + t.text + "')"),
                      t.line, t.col);
  }
  const Token& expect(Token::Kind k, const std::string& what) {
    if (!at(k)) fail("expected " + what);
    return next();
  }
};

}  // namespace holq

#endif
