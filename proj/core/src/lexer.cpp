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

#include "lexer.hpp"

namespace holq {

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0, n = src.size();

  auto push = [&](Token::Kind k, std::string text, int l, int c) {
    out.push_back(Token{k, std::move(text), l, c});
  };

  while (i < n) {
    char c = src[i];
    int l = line, co = col;
    auto adv = [&](std::size_t k = 1) {
      for (std::size_t j = 0; j < k; ++j) {
        if (src[i] == '\n') { ++line; col = 1; } else { ++col; }
        ++i;
      }
    };

    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { adv(); continue; }
    if (c == '#') {  // comment to end of line
      while (i < n && src[i] != '\n') adv();
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < n && ident_char(src[j])) ++j;
      std::string text = src.substr(i, j - i);
      adv(j - i);
      push(Token::Kind::Ident, std::move(text), l, co);
      continue;
    }
    if (c >= '0' && c <= '9') {
      std::size_t j = i;
      while (j < n && src[j] >= '0' && src[j] <= '9') ++j;
      std::string text = src.substr(i, j - i);
      adv(j - i);
      push(Token::Kind::Int, std::move(text), l, co);
      continue;
    }
    if (c == '\'') {
      std::size_t j = i + 1;
      if (j >= n || !ident_start(src[j]))
        throw parse_error("expected type variable name after '", l, co);
      while (j < n && ident_char(src[j])) ++j;
      std::string text = src.substr(i + 1, j - i - 1);
      adv(j - i);
      push(Token::Kind::TyVar, std::move(text), l, co);
      continue;
    }
    if (c == '"') {
      std::size_t j = i + 1;
      while (j < n && src[j] != '"' && src[j] != '\n') ++j;
      if (j >= n || src[j] != '"')
        throw parse_error("unterminated string literal", l, co);
      std::string text = src.substr(i + 1, j - i - 1);
      adv(j - i + 1);
      push(Token::Kind::Str, std::move(text), l, co);
      continue;
    }
    if (c == ':') {
      if (i + 1 < n && src[i + 1] == '=') {
        adv(2);
        push(Token::Kind::ColonEq, ":=", l, co);
      } else {
        adv();
        push(Token::Kind::Colon, ":", l, co);
      }
      continue;
    }
    switch (c) {
      case '(': adv(); push(Token::Kind::LParen, "(", l, co); continue;
      case ')': adv(); push(Token::Kind::RParen, ")", l, co); continue;
      case '{': adv(); push(Token::Kind::LBrace, "{", l, co); continue;
      case '}': adv(); push(Token::Kind::RBrace, "}", l, co); continue;
      case '\\': adv(); push(Token::Kind::Lambda, "\\", l, co); continue;
      case '.': adv(); push(Token::Kind::Dot, ".", l, co); continue;
      case ',': adv(); push(Token::Kind::Comma, ",", l, co); continue;
      default: break;
    }
    if (op_char(c)) {
      std::size_t j = i;
      while (j < n && op_char(src[j])) ++j;
      std::string text = src.substr(i, j - i);
      adv(j - i);
      push(Token::Kind::Op, std::move(text), l, co);
      continue;
    }
    throw parse_error(std::string("unexpected character '") + c + "'", l, co);
  }
  out.push_back(Token{Token::Kind::Eof, "", line, col});
  return out;
}

}  // namespace holq
