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

#ifndef HOLQ_TERM_HPP
#define HOLQ_TERM_HPP

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "holq/type.hpp"

namespace holq {

// Terms of the simply typed lambda calculus with schematic constants.
// The only primitive logical constant is Q : 'a -> 'a -> o; everything
// else is a declared constant or a definition.
//
// Nodes are immutable and shared.  Type fields are filled in by
// elaboration (typecheck.hpp); freshly parsed terms carry types only at
// binders (mandatory in the concrete syntax) and at ascriptions.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Const, Var, Lam, App };
  Kind kind;
  std::string name;                // Const, Var, Lam (binder name)
  TypePtr ty;                      // Var/Const: node type; Lam: binder type
  std::vector<TypePtr> type_args;  // Const: scheme instantiation, in scheme order
  TermPtr sub;                     // Lam: body; App: function
  TermPtr arg;                     // App: argument
  TypePtr hint;                    // ascription constraint, consumed by inference
};

TermPtr mk_const(std::string name, std::vector<TypePtr> type_args = {},
                 TypePtr ty = nullptr);
TermPtr mk_var(std::string name, TypePtr ty = nullptr);
TermPtr mk_lam(std::string binder, TypePtr binder_ty, TermPtr body);
TermPtr mk_app(TermPtr f, TermPtr a);
TermPtr mk_app(TermPtr f, TermPtr a, TermPtr b);
TermPtr mk_ascribe(TermPtr t, TypePtr ty);  // copy of t carrying an ascription

// Type of an elaborated term, recomputed structurally.  Throws type_error
// if the term lacks annotations or is ill-formed.
TypePtr node_type(const TermPtr& t);

// Free variables with their types (null when not yet elaborated).
std::map<std::string, TypePtr> free_vars(const TermPtr& t);
bool is_closed(const TermPtr& t);

// Syntactic identity up to consistent renaming of bound variables.
// Binder annotations must agree; types at occurrences are compared only
// when both sides carry them.
bool alpha_equal(const TermPtr& a, const TermPtr& b);

// As alpha_equal, but additionally allows a global bijective renaming of
// type variables (independently elaborated terms carry different fresh
// variable names).
bool alpha_equal_mod_tyvars(const TermPtr& a, const TermPtr& b);

// Capture-avoiding substitution of u for the free variable x.  When
// x_ty is given and both it and u's type are known they must agree.
TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& u,
                   const TypePtr& x_ty = nullptr);

// Fresh name based on `base` avoiding everything in `taken`.
std::string fresh_name(const std::string& base, const std::set<std::string>& taken);

// Apply a type-variable substitution to every annotation in the term.
TermPtr apply_type_map_term(const TermPtr& t, const std::map<std::string, TypePtr>& m);

/// Structural traversal helper: calls f on every subterm, outside-in.
void walk(const TermPtr& t, const std::function<void(const TermPtr&)>& f);

}  // namespace holq

#endif
