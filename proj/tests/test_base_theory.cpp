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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "holq/base_theory.hpp"
#include "holq/parser.hpp"
#include "holq/printer.hpp"
#include "holq/reduction.hpp"
#include "holq/semantics.hpp"
#include "holq/typecheck.hpp"
#include "support/gen.hpp"

using namespace holq;

namespace {

const TheoryEnv& qp() {
  static TheoryEnv env = q0_env();
  return env;
}

const TheoryEnv& vn() {
  static TheoryEnv env = via_negativa_env();
  return env;
}

// Definition body looked up by name.
const TermPtr& body_of(const TheoryEnv& env, const std::string& name) {
  const Definition* d = env.find_def(name);
  REQUIRE(d != nullptr);
  return d->body;
}

bool body_matches(const TheoryEnv& env, const std::string& name,
                  const std::string& display) {
  return alpha_equal(body_of(env, name), parse_term(display, env));
}

// Walk a term and collect the names of all constants.
void const_names(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::Const: out.insert(t->name); return;
    case Term::Kind::Var: return;
    case Term::Kind::Lam: const_names(t->sub, out); return;
    case Term::Kind::App:
      const_names(t->sub, out);
      const_names(t->arg, out);
      return;
  }
}

// Unfold every definition except D itself (the Q/D core form).
TermPtr core_form(const TermPtr& t, const TheoryEnv& env) {
  std::set<std::string> names;
  for (const auto& d : env.defs)
    if (d.name != "D") names.insert(d.name);
  return unfold(elaborate(t, env).term, env, names);
}

bool semantically_equal(const std::string& lhs, const std::string& rhs,
                        const TheoryEnv& env, std::uint64_t max_size = 3) {
  TermPtr goal = parse_term("(" + lhs + ") = (" + rhs + ")", env);
  for (std::uint64_t n = 1; n <= max_size; ++n) {
    ValidityResult r = check_valid(goal, env, uniform_sizes(env, n));
    if (!r.valid) return false;
  }
  return true;
}

// Tree-level variant that preserves constant instantiations (printing
// would drop type_args); `inst` pins schematic operands to one instance.
bool semantically_equal_terms(TermPtr a, TermPtr b, const TheoryEnv& env,
                              const TypePtr& inst = nullptr) {
  if (inst) {
    a = mk_ascribe(a, inst);
    b = mk_ascribe(b, inst);
  }
  TermPtr goal = mk_app(mk_const("Q"), a, b);
  for (std::uint64_t n = 1; n <= 3; ++n)
    if (!check_valid(goal, env, uniform_sizes(env, n)).valid) return false;
  return true;
}

// q0 over one base type of individuals, as theory files declare it.
const TheoryEnv& qi() {
  static TheoryEnv env = [] {
    TheoryEnv e = q0_env();
    declare_type(e, "i");
    return e;
  }();
  return env;
}

}  // namespace

TEST_CASE("equality-primitive definitions: displayed bodies") {
  CHECK(body_matches(qp(), "true", "(\\x:o. x) = (\\x:o. x)"));
  CHECK(body_matches(qp(), "false", "(\\x:o. x) = (\\x:o. true)"));
  CHECK(body_matches(qp(), "not", "\\x:o. false = x"));
  CHECK(body_matches(qp(), "forall", "\\P:'a -> o. P = (\\x:'a. true)"));
  CHECK(body_matches(
      qp(), "and",
      "\\x:o. \\y:o. (\\f:o -> o -> o. f x y) = (\\f:o -> o -> o. f true true)"));
  CHECK(body_matches(qp(), "D", "\\x:'a. \\y:'a. not (x = y)"));
  CHECK(body_matches(qp(), "or", "\\x:o. \\y:o. not (not x & not y)"));
  CHECK(body_matches(qp(), "imp", "\\x:o. \\y:o. not x | y"));
  CHECK(body_matches(qp(), "iff", "\\x:o. \\y:o. x = y"));
  CHECK(body_matches(qp(), "exists",
                     "\\P:'a -> o. not (forall x:'a. not (P x))"));
  CHECK(body_matches(
      qp(), "U",
      "\\f:'a -> o. \\g:'a -> o. forall x:'a. not (f x & g x)"));
}

TEST_CASE("difference-primitive definitions: displayed bodies") {
  CHECK(body_matches(vn(), "false",
                     "(D : o -> o -> o) != (D : o -> o -> o)"));
  CHECK(body_matches(vn(), "true", "(\\x:o. false) != (\\x:o. x)"));
  CHECK(body_matches(vn(), "not", "\\s:o. s != true"));
  CHECK(body_matches(vn(), "or",
                     "\\s:o. \\t:o. (\\f:o -> o -> o. f s t) != "
                     "(\\f:o -> o -> o. f false false)"));
  CHECK(body_matches(vn(), "exists", "\\P:'a -> o. P != (\\x:'a. false)"));
}

TEST_CASE("all definition bodies typecheck") {
  for (const TheoryEnv* env : {&qp(), &vn()})
    for (const auto& d : env->defs) {
      CAPTURE(d.name);
      CHECK_NOTHROW(infer_type(d.body, *env));
    }
}

TEST_CASE("full unfolding leaves only the equality primitive") {
  for (const TheoryEnv* env : {&qp(), &vn()})
    for (const auto& d : env->defs) {
      CAPTURE(d.name);
      TermPtr u = unfold(elaborate(parse_term(d.name, *env), *env).term, *env);
      std::set<std::string> cs;
      const_names(u, cs);
      CHECK(cs == std::set<std::string>{"Q"});
    }
}

TEST_CASE("dualize: primitive swap and involution examples") {
  TermPtr q = parse_term("Q", qp());
  TermPtr d1 = dualize(q, qp());
  CHECK(d1->kind == Term::Kind::Const);
  CHECK(d1->name == "D");
  CHECK(dualize(d1, qp())->name == "Q");
}

TEST_CASE("dualize: involution on generated equality/difference terms") {
  gen::Rng r(77);
  gen::TypedPool pool = gen::TypedPool::standard();
  for (int k = 0; k < 1000; ++k) {
    TermPtr t = gen::random_typed_term(r, pool, 5, /*allow_d=*/true);
    TermPtr once = dualize(t, qp());
    TermPtr twice = dualize(once, qp());
    CAPTURE(show_term(t));
    CHECK(alpha_equal(twice, elaborate(t, qp()).term));
  }
}

TEST_CASE("dualize: rejects terms with non-core residue") {
  // A free variable is fine, but an undefined constant embedded via an
  // environment without its definition cannot reach the Q/D core.
  TheoryEnv env = TheoryEnv::kernel();
  declare_const(env, "mystery", TypeScheme::close_over(ty_o()));
  CHECK_THROWS(dualize(parse_term("mystery = mystery", env), env));
}

TEST_CASE("dual pairs: positive definitions dualize to negative ones") {
  // Pairs displayed side by side: positive-env name vs negative-env name.
  struct Pair {
    const char* pos;
    const char* neg;
    const char* instance;  // concrete instance for schematic pairs
  } pairs[] = {
      {"true", "false", nullptr},
      {"false", "true", nullptr},
      {"not", "not", nullptr},
      {"and", "or", nullptr},
      {"forall", "exists", "(i -> o) -> o"},
  };
  TheoryEnv env = via_negativa_env();
  declare_type(env, "i");
  for (const auto& p : pairs) {
    CAPTURE(p.pos);
    TermPtr lhs = dualize(parse_term(p.pos, qp()), qp());
    TermPtr rhs = core_form(parse_term(p.neg, env), env);
    std::string level;
    bool ok = false;
    try {
      if (betaeta_equal(lhs, rhs, env)) {
        level = "betaeta";
        ok = true;
      }
    } catch (const std::exception&) {
      // fall through to the semantic level
    }
    if (!ok) {
      TypePtr inst = p.instance ? parse_type(p.instance) : nullptr;
      ok = semantically_equal_terms(lhs, rhs, env, inst);
      level = "semantic";
    }
    CHECK(ok);
    MESSAGE("dual pair ", std::string(p.pos), " / ", std::string(p.neg),
            " verified at level: ", level);
    CHECK((level == "betaeta" || level == "semantic"));
  }
}

TEST_CASE("conjunction: truth-table form agrees with the alternate form") {
  CHECK(semantically_equal("p & q", "and_henkin p q", qp()));
}

TEST_CASE("incompatibility U is pointwise negated conjunction") {
  CHECK(semantically_equal("U (f : i -> o) g",
                           "forall x:i. not (f x & g x)", qi()));
}

TEST_CASE("Leibniz equality: construction and agreement at o") {
  TermPtr li = leibniz_eq(ty_base("i"));
  CHECK(type_equal(infer_type(li, qi()),
                   parse_type("i -> i -> o")));

  TermPtr lo = leibniz_eq(ty_o());
  CHECK(semantically_equal("(" + show_term(lo) + ") x y", "x = y", qp(), 1));
}

TEST_CASE("Leibniz equality rejects schematic types") {
  CHECK_THROWS(leibniz_eq(ty_var("a")));
}

TEST_CASE("description at o: the inverse-of-equality law") {
  std::string name;
  TheoryEnv env = ensure_iota(qp(), ty_o(), &name);
  CHECK(name == "iota_o");
  CHECK(alpha_equal(body_of(env, name), parse_term("Q (\\x:o. x)", env)));
  // iota_o (Q true) = true holds in every model.
  ValidityResult r = check_valid(parse_term("iota_o (Q true) = true", env),
                                 env, uniform_sizes(env, 1));
  CHECK(r.valid);
}

TEST_CASE("description at i -> o: inductive construction typechecks") {
  std::string name;
  TheoryEnv env = ensure_iota(ensure_iota(qi(), ty_base("i")),
                              parse_type("i -> o"), &name);
  CHECK(type_equal(infer_type(parse_term(name, env), env),
                   parse_type("((i -> o) -> o) -> i -> o")));
}

TEST_CASE("descriptions and choice axiom instances at small scale") {
  TheoryEnv env = ensure_iota(qi(), ty_base("i"));
  // Descriptions: the operator inverts equality.
  ValidityResult desc = check_valid(
      parse_term("iota_i (Q (y : i)) = y", env), env,
      {{{"i", 2}}});
  CHECK(desc.valid);
  // Choice: whatever f accepts, f accepts the described element.
  ValidityResult choice = check_valid(
      parse_term("f (x : i) -> f (iota_i f)", env), env,
      {{{"i", 1}}, {{"i", 2}}, {{"i", 3}}});
  CHECK(choice.valid);
}

TEST_CASE("iota_env_extension covers o and every declared base") {
  TheoryEnv env = iota_env_extension(qi());
  CHECK(env.find_def("iota_o") != nullptr);
  CHECK(env.sig.find_const("iota_i") != nullptr);
}

TEST_CASE("description operator rejects schematic request") {
  CHECK_THROWS(ensure_iota(qp(), ty_var("a")));
}
