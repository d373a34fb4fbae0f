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

#ifndef HOLQ_EMBEDDINGS_HPP
#define HOLQ_EMBEDDINGS_HPP

#include <optional>
#include <string>
#include <vector>

#include "holq/theory.hpp"

namespace holq {

// Shallow embeddings are data: each pack is directive text (definitions
// and notation) executed against an environment, plus prerequisites that
// must already be present.  Everything a pack defines unfolds to terms
// whose only constant is Q, apart from the pack's declared parameters.
struct EmbeddingPack {
  std::string name;
  // Loading is idempotent: when `probe` already names a constant in the
  // environment the pack is considered present and loading is a no-op.
  std::string probe;
  std::vector<std::string> required_types;
  // Constants the user must have declared (name + expected scheme text);
  // scheme is checked when nonempty.
  std::vector<std::pair<std::string, std::string>> required_consts;
  // Constants that must merely exist (e.g. the q0 layer).
  std::vector<std::string> required_defs;
  std::string text;
};

// The two definitional towers over Q (defined alongside the base theory;
// exposed as packs so `include q0` / `include via-negativa` work uniformly).
const EmbeddingPack& q0_pack();
const EmbeddingPack& via_negativa_pack();

// Sets over worlds, box/dia over an explicit relation parameter.
// Requires base type w and the q0 layer.
const EmbeddingPack& modal_pack();

// Quantifier lifting over world-indexed propositions: qall/qex plus the
// constant-domain (qallc) and varying-domain (qallv) relativizations.
const EmbeddingPack& quantifier_pack();

// Paraconsistent negation and consistency from a border operator B
// ('a -> o) -> 'a -> o, which the user declares and optionally axiomatizes.
const EmbeddingPack& lfi_pack();

// Optional axiom presets for B over a user-declared base type u: an empty
// border (classical negation) and the border of the indiscrete topology.
// The unconstrained preset is just lfi_pack with no axioms.
const EmbeddingPack& lfi_classical_pack();
const EmbeddingPack& lfi_indiscrete_pack();

// Routley-Meyer fusion and its residuals over a ternary relation R3.
const EmbeddingPack& rm_pack();

// Boolean layer on binary relations plus the Peircean layer: converse,
// complement-of-converse, composition, dual composition, residuals.
const EmbeddingPack& relational_pack();

// Cyclic linear-logic reading of the relation algebra: multiplicatives
// from composition and its dual, additives from the lattice, exponentials
// from meets/joins with identity and diversity.
const EmbeddingPack& cyclic_ll_pack();

// Church encodings: starred booleans, pairs with projections, if/not/and/or.
const EmbeddingPack& church_pack();

const std::vector<const EmbeddingPack*>& all_packs();
const EmbeddingPack* find_pack(const std::string& name);

// Verifies prerequisites then applies the pack's directives.
TheoryEnv load_embedding(const TheoryEnv& env, const EmbeddingPack& pack);

}  // namespace holq

#endif
