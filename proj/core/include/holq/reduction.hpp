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

#ifndef HOLQ_REDUCTION_HPP
#define HOLQ_REDUCTION_HPP

#include <cstdint>
#include <set>
#include <string>

#include "holq/theory.hpp"

namespace holq {

enum class NormMode { Beta, BetaEta };

inline constexpr std::uint64_t kDefaultNormFuel = 1'000'000;

// Normal-order beta normalization; eta is performed as a contraction pass
// on the beta-normal form.  Well-typed terms always terminate; the fuel
// guards ill-typed terms admitted in unchecked mode.  No unfolding.
TermPtr beta_normalize(const TermPtr& t, NormMode mode = NormMode::BetaEta,
                       std::uint64_t fuel = kDefaultNormFuel);

// Applicative-order variant, used as an independent strategy for
// confluence cross-checks.
TermPtr beta_normalize_applicative(const TermPtr& t,
                                   std::uint64_t fuel = kDefaultNormFuel);

// Replace defined constants by their instantiated bodies, to fixpoint.
// The `names` overload restricts unfolding to the given definitions.
// Terms must be elaborated (constants need their type_args).
TermPtr unfold(const TermPtr& t, const TheoryEnv& env);
TermPtr unfold(const TermPtr& t, const TheoryEnv& env,
               const std::set<std::string>& names);

// Unfold all definitions, then beta(-eta) normalize.  Elaborates first.
TermPtr normalize(const TermPtr& t, const TheoryEnv& env,
                  NormMode mode = NormMode::BetaEta,
                  std::uint64_t fuel = kDefaultNormFuel);

// True iff the two terms have alpha-equal normal forms.  Their types must
// unify; throws type_error otherwise.
bool betaeta_equal(const TermPtr& a, const TermPtr& b, const TheoryEnv& env);

}  // namespace holq

#endif
