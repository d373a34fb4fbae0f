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

#ifndef HOLQ_PARSER_HPP
#define HOLQ_PARSER_HPP

#include <string>

#include "holq/theory.hpp"

namespace holq {

// Concrete syntax.
//
//   term  ::= '\' ident ':' type '.' term
//           | BINDER ident ':' type '.' term        (declared binders)
//           | term INFIX term                       ('=' '!=' and declared ops)
//           | appterm
//   appterm ::= appterm atom | atom
//   atom  ::= ident | '(' term ')' | '(' term ':' type ')'
//   type  ::= btype '->' type | btype
//   btype ::= ident | ''' ident | '(' type ')'
//
// '#' starts a comment running to end of line.  '=' / '!=' are infix for
// fully applied Q and D, left-associative and tighter than user operators.
// Identifiers match [A-Za-z_][A-Za-z0-9_']*; directive keywords (def,
// axiom, check, ...) are reserved and terminate a term.

TypePtr parse_type(const std::string& src);

// Resolves identifiers against env's signature (binders shadow constants).
// Unknown identifiers become free variables, or errors under `strict`.
TermPtr parse_term(const std::string& src, const TheoryEnv& env, bool strict = false);
TermPtr parse_term(const std::string& src);  // kernel environment

}  // namespace holq

#endif
