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

#ifndef HOLQ_COMBINATOR_HPP
#define HOLQ_COMBINATOR_HPP

#include <cstdint>
#include <string>

#include "holq/theory.hpp"

namespace holq {

// Untyped application-only terms over the combinator constants
//
//   I x     = x
//   C x y   = x
//   T f x y = f y x
//   Z f g x = f (g x)
//   S f g x = f x (g x)
//
// plus U, the inert incompatibility constant (its meaning is logical, not
// rewriting).  Reduction is leftmost-outermost with a fuel bound, since
// untyped terms may diverge.

inline constexpr std::uint64_t kDefaultCombFuel = 10'000;

// Environment declaring S, C, I, T, Z, U for parsing and printing.
const TheoryEnv& comb_env();

bool is_comb_term(const TermPtr& t);  // App/Var/Const only

TermPtr parse_comb(const std::string& src);

TermPtr combinator_reduce(const TermPtr& t, std::uint64_t fuel = kDefaultCombFuel);

// Functional abstraction of x out of t, emitting only {S, C} besides the
// atoms of t:  [x]x = S C C,  [x]t = C t for x not free,
// [x](t u) = S [x]t [x]u.  The output is not post-optimized.
TermPtr bracket_abstract(const TermPtr& t, const std::string& x);

}  // namespace holq

#endif
