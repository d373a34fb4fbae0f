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

#ifndef HOLQ_THEORY_TEXT_HPP
#define HOLQ_THEORY_TEXT_HPP

#include <functional>
#include <string>

#include "holq/theory.hpp"

namespace holq {

// Theory-file directives:
//
//   type NAME
//   const NAME : TYPE
//   def NAME : TYPE := TERM
//   axiom NAME : TERM
//   include PACK            (q0, via-negativa, church, modal, relational,
//                            ll, lfi, rm, ... or a quoted file path)
//   infix PREC SYMBOL NAME
//   binder NAME
//   check ...               (handled by the sink; rejected if none)
//
// This is the environment-building half of the theory-file format; check
// execution lives in script.hpp.  Packs are plain directive text, so
// adding a logic means writing a pack, not code.

struct CheckSpec {
  std::string kind;   // valid | countermodel | normal-eq | eval | dualize
  std::string name;   // optional label
  std::string sizes;  // raw sizes clause, e.g. "i=1..3,w=2" (may be empty)
  std::string cap;    // raw cap override (may be empty)
  std::string atoms;  // raw atoms override for B-valued eval (may be empty)
  TermPtr lhs;        // payload
  TermPtr rhs;        // second payload after '==' (may be null)
  int line = 0;
};

// Runs directives from `text` against a copy of `start`.  `where` names
// the source for error messages; `base_dir` resolves quoted includes.
// Each `check` directive is handed to `sink` as it is reached (with the
// environment built so far); a null sink makes `check` an error.
TheoryEnv apply_directives(
    const TheoryEnv& start, const std::string& text, const std::string& where,
    const std::string& base_dir, bool strict,
    const std::function<void(const CheckSpec&, const TheoryEnv&)>& sink = nullptr);

// True iff `name` names a builtin pack.
bool is_builtin_pack(const std::string& name);

// Loads a builtin pack (and anything it depends on having been loaded
// already is the caller's business; packs report missing prerequisites).
TheoryEnv load_pack(const TheoryEnv& env, const std::string& name);

}  // namespace holq

#endif
