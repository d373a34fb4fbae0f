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

#ifndef HOLQ_BASE_THEORY_HPP
#define HOLQ_BASE_THEORY_HPP

#include <string>

#include "holq/theory.hpp"

namespace holq {

// The positive definitional tower over Q: true, false, not, forall, and
// (plus the Henkin variant and_henkin), or, imp, iff, D, exists, and the
// incompatibility U, with &, |, ->, <-> and forall/exists sugar.
TheoryEnv q0_env();

// The dual tower that treats disequality as primitive: false, true, not,
// or, exists defined through D (which itself bottoms out in Q, keeping
// one kernel primitive), and the remaining connectives by De Morgan.
TheoryEnv via_negativa_env();

// Unfold every definition except D itself, then swap Q and D (preserving
// type instantiations).  Errors if constants other than Q and D survive
// unfolding.  Involutive up to alpha-equivalence.
TermPtr dualize(const TermPtr& t, const TheoryEnv& env);

// Leibniz equality at a concrete type:  \x:a. \y:a. forall f:a -> o. f x -> f y.
// Built over q0; agrees with Q on every finite standard model.
TermPtr leibniz_eq(const TypePtr& alpha);

// Description operators.  iota_o is defined as Q (\x:o. x); at a declared
// base type b, iota_b is a constant interpreted in each model as "some
// element of the denoted set, or a default when empty"; at arrow types
// the operator is defined inductively and unfolds to Q-only terms.
std::string iota_name(const TypePtr& ty);

// Extends env with iota_o and with iota_b for every declared base type.
TheoryEnv iota_env_extension(const TheoryEnv& env);

// Ensures the operator exists at exactly `ty` (recursively for arrows).
// `name_out`, when given, receives the constant's name.
TheoryEnv ensure_iota(const TheoryEnv& env, const TypePtr& ty,
                      std::string* name_out = nullptr);

}  // namespace holq

#endif
