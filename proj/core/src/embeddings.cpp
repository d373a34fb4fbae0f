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

#include "holq/embeddings.hpp"

#include "holq/error.hpp"
#include "holq/parser.hpp"
#include "holq/theory_text.hpp"
#include "holq/typecheck.hpp"

namespace holq {

namespace {

// ---------------------------------------------------------------------------
// Pack texts.  Each pack is ordinary directive text; the definitions unfold
// to Q-only terms apart from the pack's declared parameters (w, B, R3, ...).
// ---------------------------------------------------------------------------

// Sets over a base type w of worlds; box/dia take the accessibility
// relation as an explicit argument, so one theory can host many relations.
const char* kModalText = R"(
def univ : w -> o := \x:w. true
def empty : w -> o := \x:w. false
def compl : (w -> o) -> w -> o := \A:w -> o. \x:w. not (A x)
def cup : (w -> o) -> (w -> o) -> w -> o := \A:w -> o. \B:w -> o. \x:w. A x | B x
def cap : (w -> o) -> (w -> o) -> w -> o := \A:w -> o. \B:w -> o. \x:w. A x & B x
def imps : (w -> o) -> (w -> o) -> w -> o := \A:w -> o. \B:w -> o. \x:w. A x -> B x
def setdif : (w -> o) -> (w -> o) -> w -> o := \A:w -> o. \B:w -> o. \x:w. A x & not (B x)
def bigcup : ((w -> o) -> o) -> w -> o := \F:(w -> o) -> o. \x:w. exists A:w -> o. F A & A x
def bigcap : ((w -> o) -> o) -> w -> o := \F:(w -> o) -> o. \x:w. forall A:w -> o. F A -> A x
def subset : (w -> o) -> (w -> o) -> o := \A:w -> o. \B:w -> o. forall x:w. A x -> B x
def box : (w -> w -> o) -> (w -> o) -> w -> o := \R:w -> w -> o. \A:w -> o. \x:w. forall y:w. R x y -> A y
def dia : (w -> w -> o) -> (w -> o) -> w -> o := \R:w -> w -> o. \A:w -> o. \x:w. exists y:w. R x y & A y
def mvalid : (w -> o) -> o := \A:w -> o. forall x:w. A x
)";

// Quantifiers lifted to world-indexed propositions, plus the relativized
// constant-domain and varying-domain universals.
const char* kQuantifierText = R"(
def qall : ('b -> w -> o) -> w -> o := \P:'b -> w -> o. \x:w. forall a:'b. P a x
binder qall
def qex : ('b -> w -> o) -> w -> o := \P:'b -> w -> o. \x:w. exists a:'b. P a x
binder qex
def qallc : ('b -> o) -> ('b -> w -> o) -> w -> o := \E:'b -> o. \P:'b -> w -> o. \x:w. forall a:'b. E a -> P a x
def qallv : ('b -> w -> o) -> ('b -> w -> o) -> w -> o := \E:'b -> w -> o. \P:'b -> w -> o. \x:w. forall a:'b. E a x -> P a x
)";

// Paraconsistent negation from a border operator B: a point refutes P
// classically or sits on P's border.  cons marks the consistent region.
const char* kLfiText = R"(
def pneg : ('a -> o) -> 'a -> o := \P:'a -> o. \x:'a. not (P x) | B P x
def cons : ('a -> o) -> 'a -> o := \P:'a -> o. \x:'a. not (B P x)
)";

// Empty border: pneg collapses to classical complement on u.
const char* kLfiClassicalText = R"(
axiom border_empty : forall P:u -> o. forall x:u. not (B P x)
)";

// Border of the indiscrete topology on u: trivial sets have empty
// boundary, every other set's boundary is all of u.
const char* kLfiIndiscreteText = R"(
axiom border_indiscrete : forall P:u -> o. ((P = (\x:u. true) | P = (\x:u. false)) -> (forall x:u. not (B P x))) & (not (P = (\x:u. true) | P = (\x:u. false)) -> (forall x:u. B P x))
)";

// Routley-Meyer fusion and its two residuals over a ternary R3.  fuse is
// the binary left-image of R3; under/over residuate it in each argument,
// so (fuse A B "below" T) iff (B "below" under A T) iff (A "below" over T B).
const char* kRmText = R"(
def fuse : ('a -> o) -> ('a -> o) -> 'a -> o := \A:'a -> o. \B:'a -> o. \z:'a. exists x:'a. exists y:'a. A x & B y & R3 x y z
def under : ('a -> o) -> ('a -> o) -> 'a -> o := \A:'a -> o. \B:'a -> o. \y:'a. forall x:'a. forall z:'a. R3 x y z -> A x -> B z
def over : ('a -> o) -> ('a -> o) -> 'a -> o := \A:'a -> o. \B:'a -> o. \x:'a. forall y:'a. forall z:'a. R3 x y z -> B y -> A z
)";

// Binary relations: the Boolean layer, then the Peircean layer built from
// converse and composition, with both residuals of composition.
const char* kRelationalText = R"(
def runiv : 'a -> 'a -> o := \x:'a. \y:'a. true
def rempty : 'a -> 'a -> o := \x:'a. \y:'a. false
def rcompl : ('a -> 'a -> o) -> 'a -> 'a -> o := \R:'a -> 'a -> o. \x:'a. \y:'a. not (R x y)
def rcup : ('a -> 'a -> o) -> ('a -> 'a -> o) -> 'a -> 'a -> o := \R:'a -> 'a -> o. \S:'a -> 'a -> o. \x:'a. \y:'a. R x y | S x y
def rcap : ('a -> 'a -> o) -> ('a -> 'a -> o) -> 'a -> 'a -> o := \R:'a -> 'a -> o. \S:'a -> 'a -> o. \x:'a. \y:'a. R x y & S x y
def rimps : ('a -> 'a -> o) -> ('a -> 'a -> o) -> 'a -> 'a -> o := \R:'a -> 'a -> o. \S:'a -> 'a -> o. \x:'a. \y:'a. R x y -> S x y
def rsetdif : ('a -> 'a -> o) -> ('a -> 'a -> o) -> 'a -> 'a -> o := \R:'a -> 'a -> o. \S:'a -> 'a -> o. \x:'a. \y:'a. R x y & not (S x y)
def rbigcup : (('a -> 'a -> o) -> o) -> 'a -> 'a -> o := \F:('a -> 'a -> o) -> o. \x:'a. \y:'a. exists R:'a -> 'a -> o. F R & R x y
def rbigcap : (('a -> 'a -> o) -> o) -> 'a -> 'a -> o := \F:('a -> 'a -> o) -> o. \x:'a. \y:'a. forall R:'a -> 'a -> o. F R -> R x y
def rsubset : ('a -> 'a -> o) -> ('a -> 'a -> o) -> o := \R:'a -> 'a -> o. \S:'a -> 'a -> o. forall x:'a. forall y:'a. R x y -> S x y
def conv : ('a -> 'a -> o) -> 'a -> 'a -> o := \R:'a -> 'a -> o. \x:'a. \y:'a. R y x
def cotr : ('a -> 'a -> o) -> 'a -> 'a -> o := \R:'a -> 'a -> o. \x:'a. \y:'a. not (R y x)
def rcomp : ('a -> 'a -> o) -> ('a -> 'a -> o) -> 'a -> 'a -> o := \R:'a -> 'a -> o. \S:'a -> 'a -> o. \x:'a. \y:'a. exists z:'a. R x z & S z y
def rdag : ('a -> 'a -> o) -> ('a -> 'a -> o) -> 'a -> 'a -> o := \R:'a -> 'a -> o. \S:'a -> 'a -> o. \x:'a. \y:'a. forall z:'a. R x z | S z y
def rres : ('a -> 'a -> o) -> ('a -> 'a -> o) -> 'a -> 'a -> o := \R:'a -> 'a -> o. \T:'a -> 'a -> o. \z:'a. \y:'a. forall x:'a. R x z -> T x y
def lres : ('a -> 'a -> o) -> ('a -> 'a -> o) -> 'a -> 'a -> o := \T:'a -> 'a -> o. \S:'a -> 'a -> o. \x:'a. \z:'a. forall y:'a. S z y -> T x y
)";

// Cyclic multiplicative-additive reading of the relation layer: tensor is
// composition, par its De Morgan dual, the units are identity/diversity,
// linear negation is complement-of-converse, and A -o bot = lneg A.
const char* kCyclicLlText = R"(
def one : 'a -> 'a -> o := Q
def llbot : 'a -> 'a -> o := D
def lltop : 'a -> 'a -> o := runiv
def zero : 'a -> 'a -> o := rempty
def lltimes : ('a -> 'a -> o) -> ('a -> 'a -> o) -> 'a -> 'a -> o := rcomp
def llpar : ('a -> 'a -> o) -> ('a -> 'a -> o) -> 'a -> 'a -> o := rdag
def llplus : ('a -> 'a -> o) -> ('a -> 'a -> o) -> 'a -> 'a -> o := rcup
def llwith : ('a -> 'a -> o) -> ('a -> 'a -> o) -> 'a -> 'a -> o := rcap
def lolli : ('a -> 'a -> o) -> ('a -> 'a -> o) -> 'a -> 'a -> o := rres
def coimp : ('a -> 'a -> o) -> ('a -> 'a -> o) -> 'a -> 'a -> o := lres
def lneg : ('a -> 'a -> o) -> 'a -> 'a -> o := cotr
def bang : ('a -> 'a -> o) -> 'a -> 'a -> o := \R:'a -> 'a -> o. rcap R Q
def quest : ('a -> 'a -> o) -> 'a -> 'a -> o := \R:'a -> 'a -> o. rcup R D
)";

// Church encodings at simple types: an independent vocabulary that does
// not touch Q at all, for contrasting with the equational connectives.
// Each definition carries its principal type; in particular the starred
// booleans select among *two different* type parameters, which is what
// drives and_s and or_s apart and breaks the starred De Morgan law under
// non-boolean instantiation.
const char* kChurchText = R"(
def true_s : 'a -> 'b -> 'a := \t:'a. \f:'b. t
def false_s : 'a -> 'b -> 'b := \t:'a. \f:'b. f
def pair : 'a -> 'b -> ('a -> 'b -> 'c) -> 'c := \x:'a. \y:'b. \f:'a -> 'b -> 'c. f x y
def pi1 : (('a -> 'b -> 'a) -> 'c) -> 'c := \p:('a -> 'b -> 'a) -> 'c. p true_s
def pi2 : (('a -> 'b -> 'b) -> 'c) -> 'c := \p:('a -> 'b -> 'b) -> 'c. p false_s
def if_s : ('a -> 'b -> 'c) -> 'a -> 'b -> 'c := \c:'a -> 'b -> 'c. \t:'a. \e:'b. pair t e c
def not_s : (('a -> 'b -> 'b) -> ('c -> 'd -> 'c) -> 'e) -> 'e := \b:('a -> 'b -> 'b) -> ('c -> 'd -> 'c) -> 'e. if_s b false_s true_s
def and_s : ('a -> ('b -> 'c -> 'c) -> 'd) -> 'a -> 'd := \b1:'a -> ('b -> 'c -> 'c) -> 'd. \b2:'a. if_s b1 b2 false_s
def or_s : (('a -> 'b -> 'a) -> 'c -> 'd) -> 'c -> 'd := \b1:('a -> 'b -> 'a) -> 'c -> 'd. \b2:'c. if_s b1 true_s b2
)";

}  // namespace

const EmbeddingPack& modal_pack() {
  static const EmbeddingPack pack{
      "modal", "univ", {"w"}, {}, {"true", "false", "not", "and", "or",
                                   "imp", "forall", "exists"},
      kModalText};
  return pack;
}

const EmbeddingPack& quantifier_pack() {
  static const EmbeddingPack pack{
      "quantifier", "qall", {"w"}, {}, {"forall", "exists", "imp"},
      kQuantifierText};
  return pack;
}

const EmbeddingPack& lfi_pack() {
  static const EmbeddingPack pack{
      "lfi",
      "pneg",
      {},
      {{"B", "('a -> o) -> 'a -> o"}},
      {"not", "or"},
      kLfiText};
  return pack;
}

const EmbeddingPack& lfi_classical_pack() {
  static const EmbeddingPack pack{
      "lfi-classical",
      "border_empty",
      {"u"},
      {{"B", "('a -> o) -> 'a -> o"}},
      {"not", "forall"},
      kLfiClassicalText};
  return pack;
}

const EmbeddingPack& lfi_indiscrete_pack() {
  static const EmbeddingPack pack{
      "lfi-indiscrete",
      "border_indiscrete",
      {"u"},
      {{"B", "('a -> o) -> 'a -> o"}},
      {"not", "forall", "or", "and", "imp", "true", "false"},
      kLfiIndiscreteText};
  return pack;
}

const EmbeddingPack& rm_pack() {
  static const EmbeddingPack pack{
      "rm",
      "fuse",
      {},
      {{"R3", "'a -> 'a -> 'a -> o"}},
      {"and", "forall", "exists", "imp"},
      kRmText};
  return pack;
}

const EmbeddingPack& relational_pack() {
  static const EmbeddingPack pack{
      "relational", "runiv", {}, {}, {"true", "false", "not", "and", "or",
                                      "imp", "forall", "exists"},
      kRelationalText};
  return pack;
}

const EmbeddingPack& cyclic_ll_pack() {
  static const EmbeddingPack pack{
      "ll", "one", {}, {}, {"D", "rcomp", "rdag", "rcup", "rcap", "rres",
                            "lres", "runiv", "rempty", "cotr"},
      kCyclicLlText};
  return pack;
}

const EmbeddingPack& church_pack() {
  static const EmbeddingPack pack{"church", "true_s", {}, {}, {}, kChurchText};
  return pack;
}

const std::vector<const EmbeddingPack*>& all_packs() {
  static const std::vector<const EmbeddingPack*> packs{
      &q0_pack(),         &via_negativa_pack(),  &modal_pack(),
      &quantifier_pack(), &lfi_pack(),           &lfi_classical_pack(),
      &lfi_indiscrete_pack(), &rm_pack(),        &relational_pack(),
      &cyclic_ll_pack(),  &church_pack()};
  return packs;
}

const EmbeddingPack* find_pack(const std::string& name) {
  for (const EmbeddingPack* p : all_packs())
    if (p->name == name) return p;
  return nullptr;
}

TheoryEnv load_embedding(const TheoryEnv& env, const EmbeddingPack& pack) {
  if (!pack.probe.empty()) {
    if (env.sig.find_const(pack.probe)) return env;
    for (const auto& ax : env.axioms)
      if (ax.first == pack.probe) return env;
  }
  for (const std::string& ty : pack.required_types)
    if (!env.sig.has_type(ty))
      throw theory_error("pack '" + pack.name + "' needs base type '" + ty +
                         "' (declare it with: type " + ty + ")");
  for (const auto& [name, scheme_text] : pack.required_consts) {
    const ConstInfo* info = env.sig.find_const(name);
    if (!info)
      throw theory_error("pack '" + pack.name + "' needs constant '" + name +
                         "' : " + scheme_text + " (declare it first)");
    if (!scheme_text.empty()) {
      TypeScheme want = TypeScheme::close_over(parse_type(scheme_text));
      if (canonical_instance(info->scheme.body) !=
          canonical_instance(want.body))
        throw theory_error("pack '" + pack.name + "' needs '" + name + "' : " +
                           scheme_text + ", but it is declared as " +
                           show_scheme(info->scheme));
    }
  }
  for (const std::string& name : pack.required_defs)
    if (!env.sig.find_const(name))
      throw theory_error("pack '" + pack.name + "' needs '" + name +
                         "' from a connective layer (include q0 first)");
  return apply_directives(env, pack.text, "<pack " + pack.name + ">", ".",
                          true, nullptr);
}

}  // namespace holq
