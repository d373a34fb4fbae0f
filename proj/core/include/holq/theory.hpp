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

#ifndef HOLQ_THEORY_HPP
#define HOLQ_THEORY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "holq/term.hpp"
#include "holq/type.hpp"

namespace holq {

// Rank-1 type scheme: all variables are prenex and attached to constants.
struct TypeScheme {
  std::vector<std::string> vars;  // declaration order
  TypePtr body;

  // Generalize over the free type variables of t, first-occurrence order.
  static TypeScheme close_over(const TypePtr& t);
};

TypePtr instantiate(const TypeScheme& s, const std::vector<TypePtr>& args);
std::string show_scheme(const TypeScheme& s);

enum class ConstOrigin { Primitive, Declared, Defined };

struct ConstInfo {
  TypeScheme scheme;
  ConstOrigin origin;
};

// Declared vocabulary.  "o" and Q : 'a -> 'a -> o are always present.
struct Signature {
  std::set<std::string> type_consts;
  std::map<std::string, ConstInfo> term_consts;
  // Description operators at base types: constant name -> base type name.
  // These receive a fixed pick-from-the-denoted-set interpretation in
  // finite models instead of being enumerated.
  std::map<std::string, std::string> descr_consts;

  static Signature kernel();
  bool has_type(const std::string& n) const { return type_consts.count(n) > 0; }
  const ConstInfo* find_const(const std::string& n) const;
};

// Concrete-syntax sugar: user infix operators (right-associative at their
// precedence) and binder keywords.  `=` / `!=` for Q / D are built in,
// left-associative, and bind tighter than any user operator.
struct InfixSpec {
  std::string symbol;
  std::string const_name;
  int prec;
};

struct NotationTable {
  std::vector<InfixSpec> infixes;
  std::set<std::string> binders;

  const InfixSpec* find_symbol(const std::string& sym) const;
  const InfixSpec* find_const(const std::string& name) const;
  bool is_binder(const std::string& name) const { return binders.count(name) > 0; }
};

constexpr int kEqPrec = 40;  // precedence of builtin = and !=

struct Definition {
  std::string name;
  TypeScheme scheme;
  TermPtr body;  // elaborated; its free type variables are scheme.vars
};

// A theory: signature, ordered acyclic definitions, closed axioms of type
// o, and notation.  Value type; extension copies.
struct TheoryEnv {
  Signature sig;
  std::vector<Definition> defs;
  std::map<std::string, std::size_t> def_index;
  std::vector<std::pair<std::string, TermPtr>> axioms;
  NotationTable notations;

  static TheoryEnv kernel();
  const Definition* find_def(const std::string& n) const;
};

// Validating builders.  Each throws theory_error / type_error on clashes,
// unknown names, open or ill-typed bodies.
void declare_type(TheoryEnv& env, const std::string& name);
void declare_const(TheoryEnv& env, const std::string& name, const TypeScheme& scheme);
void add_definition(TheoryEnv& env, const std::string& name, const TypeScheme& scheme,
                    const TermPtr& body_raw);
void add_axiom(TheoryEnv& env, const std::string& name, const TermPtr& body_raw);
void add_infix(TheoryEnv& env, const std::string& symbol, const std::string& const_name,
               int prec);
void add_binder(TheoryEnv& env, const std::string& const_name);

}  // namespace holq

#endif
