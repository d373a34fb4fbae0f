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

#include "holq/base_theory.hpp"

#include <set>

#include "holq/embeddings.hpp"
#include "holq/error.hpp"
#include "holq/parser.hpp"
#include "holq/printer.hpp"
#include "holq/reduction.hpp"
#include "holq/theory_text.hpp"
#include "holq/typecheck.hpp"

namespace holq {

namespace {

// The positive tower: everything is an equation between lambda terms.
const char* kQ0Text = R"(
# Connectives over Q.  true is a trivially valid equation; false equates
# the identity on o with the constantly-true map; the rest follow.
def true : o := (\x:o. x) = (\x:o. x)
def false : o := (\x:o. x) = (\x:o. true)
def not : o -> o := \x:o. false = x
def D : 'a -> 'a -> o := \x:'a. \y:'a. not (x = y)
def forall : ('a -> o) -> o := \P:'a -> o. P = (\x:'a. true)
binder forall
def and : o -> o -> o := \x:o. \y:o. (\f:o -> o -> o. f x y) = (\f:o -> o -> o. f true true)
infix 30 & and
def and_henkin : o -> o -> o := \x:o. \y:o. (\f:o -> o. (f x) = y) = (\g:o -> o. g true)
def or : o -> o -> o := \x:o. \y:o. not (not x & not y)
infix 28 | or
def imp : o -> o -> o := \x:o. \y:o. not x | y
infix 25 -> imp
def iff : o -> o -> o := \x:o. \y:o. x = y
infix 24 <-> iff
def exists : ('a -> o) -> o := \P:'a -> o. not (forall x:'a. not (P x))
binder exists
def U : ('a -> o) -> ('a -> o) -> o := \f:'a -> o. \g:'a -> o. forall x:'a. not (f x & g x)
)";

// The dual tower: disequality D is introduced first, as "not (x = y)" with
// the negation inlined (so D still bottoms out in Q alone), and the other
// connectives are built from it, with the universal side recovered by
// De Morgan.
const char* kViaNegativaText = R"(
def D : 'a -> 'a -> o := \x:'a. \y:'a. ((\z:o. z) = (\z:o. (\w:o. w) = (\w:o. w))) = (x = y)
def false : o := (D : o -> o -> o) != (D : o -> o -> o)
def true : o := (\x:o. false) != (\x:o. x)
def not : o -> o := \s:o. s != true
def or : o -> o -> o := \s:o. \t:o. (\f:o -> o -> o. f s t) != (\f:o -> o -> o. f false false)
infix 28 | or
def exists : ('a -> o) -> o := \P:'a -> o. P != (\x:'a. false)
binder exists
def and : o -> o -> o := \s:o. \t:o. not (not s | not t)
infix 30 & and
def imp : o -> o -> o := \s:o. \t:o. not s | t
infix 25 -> imp
def iff : o -> o -> o := \s:o. \t:o. not (s != t)
infix 24 <-> iff
def forall : ('a -> o) -> o := \P:'a -> o. not (exists x:'a. not (P x))
binder forall
def U : ('a -> o) -> ('a -> o) -> o := \f:'a -> o. \g:'a -> o. forall x:'a. not (f x & g x)
)";

}  // namespace

const EmbeddingPack& q0_pack() {
  static const EmbeddingPack pack{"q0", "true", {}, {}, {}, kQ0Text};
  return pack;
}

const EmbeddingPack& via_negativa_pack() {
  static const EmbeddingPack pack{"via-negativa", "true", {}, {}, {},
                                  kViaNegativaText};
  return pack;
}

TheoryEnv q0_env() { return load_pack(TheoryEnv::kernel(), "q0"); }

TheoryEnv via_negativa_env() {
  return load_pack(TheoryEnv::kernel(), "via-negativa");
}

namespace {

TermPtr swap_q_d(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Const:
      if (t->name == "Q") return mk_const("D", t->type_args, t->ty);
      if (t->name == "D") return mk_const("Q", t->type_args, t->ty);
      throw theory_error("dualize: '" + t->name +
                         "' does not unfold to the Q/D core");
    case Term::Kind::Var:
      return t;
    case Term::Kind::Lam:
      return mk_lam(t->name, t->ty, swap_q_d(t->sub));
    case Term::Kind::App:
      return mk_app(swap_q_d(t->sub), swap_q_d(t->arg));
  }
  throw theory_error("dualize: malformed term");
}

}  // namespace

TermPtr dualize(const TermPtr& t, const TheoryEnv& env) {
  Elaborated e = elaborate(t, env);
  std::set<std::string> names;
  for (const auto& d : env.defs)
    if (d.name != "D") names.insert(d.name);
  TermPtr core = unfold(e.term, env, names);
  return swap_q_d(core);
}

TermPtr leibniz_eq(const TypePtr& alpha) {
  if (!is_concrete(alpha))
    throw theory_error("Leibniz equality needs a concrete type");
  static const TheoryEnv env = q0_env();
  TermPtr t =
      parse_term("\\x:'za. \\y:'za. forall f:'za -> o. f x -> f y", env, true);
  std::map<std::string, TypePtr> m{{"za", alpha}};
  return apply_type_map_term(t, m);
}

namespace {

std::string iota_suffix(const TypePtr& ty) {
  switch (ty->kind) {
    case Type::Kind::Base:
      return ty->name;
    case Type::Kind::Var:
      throw theory_error("description operator needs a concrete type");
    case Type::Kind::Arrow:
      return "F" + iota_suffix(ty->dom) + iota_suffix(ty->cod);
  }
  throw theory_error("malformed type");
}

}  // namespace

std::string iota_name(const TypePtr& ty) { return "iota_" + iota_suffix(ty); }

TheoryEnv ensure_iota(const TheoryEnv& env, const TypePtr& ty,
                      std::string* name_out) {
  std::string name = iota_name(ty);
  if (name_out) *name_out = name;
  if (env.sig.find_const(name)) return env;

  TheoryEnv cur = env;
  TypePtr op_ty = ty_arrow(ty_arrow(ty, ty_o()), ty);  // (ty -> o) -> ty
  if (ty->kind == Type::Kind::Base) {
    if (ty->name == "o") {
      // At o the operator is literally Q applied to the identity: the
      // predicate denoting {true} *is* the identity map on o.
      add_definition(cur, name, TypeScheme::close_over(op_ty),
                     parse_term("Q (\\x:o. x)", cur, true));
    } else {
      if (!cur.sig.has_type(ty->name))
        throw theory_error("unknown base type '" + ty->name + "'");
      declare_const(cur, name, TypeScheme::close_over(op_ty));
      cur.sig.descr_consts[name] = ty->name;
    }
    return cur;
  }

  // Arrow type a -> b: describe pointwise through the operator at b.
  cur = ensure_iota(cur, ty->cod);
  if (!cur.sig.find_const("exists") || !cur.sig.find_const("and"))
    throw theory_error(
        "description at function types needs the connective layer loaded");
  std::string a = show_type(ty->dom);
  std::string b = show_type(ty->cod);
  std::string fn = "(" + a + ") -> (" + b + ")";
  std::string body = "\\P:(" + fn + ") -> o. \\x:" + a + ". " +
                     iota_name(ty->cod) + " (\\y:" + b + ". exists (\\f:" + fn +
                     ". and (P f) ((f x) = y)))";
  add_definition(cur, name, TypeScheme::close_over(op_ty),
                 parse_term(body, cur, true));
  return cur;
}

TheoryEnv iota_env_extension(const TheoryEnv& env) {
  TheoryEnv cur = ensure_iota(env, ty_o());
  for (const auto& b : env.sig.type_consts)
    if (b != "o") cur = ensure_iota(cur, ty_base(b));
  return cur;
}

}  // namespace holq
