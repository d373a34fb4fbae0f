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

#include "holq/theory_text.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "holq/base_theory.hpp"
#include "holq/embeddings.hpp"
#include "holq/error.hpp"
#include "holq/typecheck.hpp"
#include "parse_internal.hpp"

namespace holq {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw theory_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Names like via-negativa or lfi-classical span several tokens.
std::string parse_dashed_name(Cursor& c) {
  std::string name = c.expect(Token::Kind::Ident, "name").text;
  while (c.at_op("-") && c.peek(1).kind == Token::Kind::Ident) {
    c.next();
    name += "-" + c.next().text;
  }
  return name;
}

std::string parse_sizes_clause(Cursor& c) {
  c.expect(Token::Kind::LBrace, "'{' after sizes");
  std::string out;
  for (;;) {
    std::string base = c.expect(Token::Kind::Ident, "base type name").text;
    if (c.at(Token::Kind::Colon)) c.next();
    else if (c.at_op("=")) c.next();
    else c.fail("expected '=' or ':' in sizes clause");
    std::string lo = c.expect(Token::Kind::Int, "size").text;
    std::string entry = base + "=" + lo;
    if (c.at(Token::Kind::Dot) && c.peek(1).kind == Token::Kind::Dot) {
      c.next();
      c.next();
      entry += ".." + c.expect(Token::Kind::Int, "upper size bound").text;
    }
    out += (out.empty() ? "" : ",") + entry;
    if (c.at(Token::Kind::Comma)) { c.next(); continue; }
    break;
  }
  c.expect(Token::Kind::RBrace, "'}' closing sizes clause");
  return out;
}

CheckSpec parse_check(Cursor& c, const TheoryEnv& env, bool strict) {
  CheckSpec spec;
  spec.line = c.peek().line;
  // kind
  if (!c.at(Token::Kind::Ident)) c.fail("expected check kind");
  std::string kind = c.next().text;
  if (kind == "normal" && c.at_op("-") && c.peek(1).kind == Token::Kind::Ident) {
    c.next();
    kind += "-" + c.next().text;
  }
  if (kind != "valid" && kind != "countermodel" && kind != "normal-eq" &&
      kind != "eval" && kind != "dualize")
    c.fail("unknown check kind '" + kind + "'");
  spec.kind = kind;
  // optional label, then clauses
  if (c.at(Token::Kind::Ident) && !c.at_ident("sizes") && !c.at_ident("cap") &&
      !c.at_ident("atoms"))
    spec.name = c.next().text;
  for (;;) {
    if (c.at_ident("sizes")) {
      c.next();
      spec.sizes = parse_sizes_clause(c);
      continue;
    }
    if (c.at_ident("cap")) {
      c.next();
      spec.cap = c.expect(Token::Kind::Int, "cap value").text;
      continue;
    }
    if (c.at_ident("atoms")) {
      c.next();
      spec.atoms = c.expect(Token::Kind::Int, "atom count").text;
      continue;
    }
    break;
  }
  c.expect(Token::Kind::Colon, "':' before the check payload");
  spec.lhs = parse_term_at(c, env, strict);
  if (c.at_op("==")) {
    c.next();
    spec.rhs = parse_term_at(c, env, strict);
  }
  return spec;
}

}  // namespace

TheoryEnv apply_directives(
    const TheoryEnv& start, const std::string& text, const std::string& where,
    const std::string& base_dir, bool strict,
    const std::function<void(const CheckSpec&, const TheoryEnv&)>& sink) {
  TheoryEnv env = start;
  std::vector<Token> toks = lex(text);
  Cursor c{&toks};

  auto directive_name = [&](const char* what) {
    const Token& t = c.expect(Token::Kind::Ident, what);
    if (is_reserved_word(t.text))
      throw parse_error("'" + t.text + "' is reserved and cannot be a name",
                        t.line, t.col);
    return t.text;
  };

  while (!c.at(Token::Kind::Eof)) {
    if (!c.at(Token::Kind::Ident)) c.fail("expected a directive");
    const Token& kw = c.peek();
    try {
      if (kw.text == "type") {
        c.next();
        declare_type(env, directive_name("type name"));
      } else if (kw.text == "const") {
        c.next();
        std::string name = directive_name("constant name");
        c.expect(Token::Kind::Colon, "':' and a type");
        TypePtr ty = parse_type_at(c);
        declare_const(env, name, TypeScheme::close_over(ty));
      } else if (kw.text == "def") {
        c.next();
        std::string name = directive_name("definition name");
        c.expect(Token::Kind::Colon, "':' and a type");
        TypePtr ty = parse_type_at(c);
        c.expect(Token::Kind::ColonEq, "':=' and a body");
        TermPtr body = parse_term_at(c, env, true);
        add_definition(env, name, TypeScheme::close_over(ty), body);
      } else if (kw.text == "axiom") {
        c.next();
        std::string name = directive_name("axiom name");
        c.expect(Token::Kind::Colon, "':' and a formula");
        TermPtr body = parse_term_at(c, env, true);
        add_axiom(env, name, body);
      } else if (kw.text == "include") {
        c.next();
        if (c.at(Token::Kind::Str)) {
          std::filesystem::path p(c.next().text);
          if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
          std::string sub = read_file(p.string());
          env = apply_directives(env, sub, p.string(), p.parent_path().string(),
                                 strict, sink);
        } else {
          std::string name = parse_dashed_name(c);
          env = load_pack(env, name);
        }
      } else if (kw.text == "infix") {
        c.next();
        int prec = std::stoi(c.expect(Token::Kind::Int, "precedence").text);
        std::string sym = c.expect(Token::Kind::Op, "operator symbol").text;
        std::string name = c.expect(Token::Kind::Ident, "constant name").text;
        add_infix(env, sym, name, prec);
      } else if (kw.text == "binder") {
        c.next();
        add_binder(env, c.expect(Token::Kind::Ident, "constant name").text);
      } else if (kw.text == "check") {
        int line = kw.line, col = kw.col;
        c.next();
        CheckSpec spec = parse_check(c, env, strict);
        if (!sink)
          throw parse_error("'check' is not allowed here", line, col);
        sink(spec, env);
      } else {
        c.fail("unknown directive '" + kw.text + "'");
      }
    } catch (const parse_error&) {
      throw;
    } catch (const std::exception& e) {
      // Attach the source location of the directive that failed.
      throw parse_error(where + ": " + e.what(), kw.line, kw.col);
    }
  }
  return env;
}

namespace {

std::vector<const EmbeddingPack*> pack_sequence(const std::string& name) {
  auto P = [](const EmbeddingPack& p) { return &p; };
  if (name == "q0") return {P(q0_pack())};
  if (name == "via-negativa") return {P(via_negativa_pack())};
  if (name == "church") return {P(church_pack())};
  if (name == "modal") return {P(q0_pack()), P(modal_pack()), P(quantifier_pack())};
  if (name == "quantifier") return {P(q0_pack()), P(quantifier_pack())};
  if (name == "relational") return {P(q0_pack()), P(relational_pack())};
  if (name == "ll")
    return {P(q0_pack()), P(relational_pack()), P(cyclic_ll_pack())};
  if (name == "rm") return {P(q0_pack()), P(rm_pack())};
  if (name == "lfi") return {P(q0_pack()), P(lfi_pack())};
  if (name == "lfi-classical")
    return {P(q0_pack()), P(lfi_pack()), P(lfi_classical_pack())};
  if (name == "lfi-indiscrete")
    return {P(q0_pack()), P(lfi_pack()), P(lfi_indiscrete_pack())};
  return {};
}

}  // namespace

bool is_builtin_pack(const std::string& name) {
  return !pack_sequence(name).empty();
}

TheoryEnv load_pack(const TheoryEnv& env, const std::string& name) {
  auto seq = pack_sequence(name);
  if (seq.empty()) throw theory_error("unknown pack '" + name + "'");
  TheoryEnv cur = env;
  for (const EmbeddingPack* p : seq) cur = load_embedding(cur, *p);
  return cur;
}

}  // namespace holq
