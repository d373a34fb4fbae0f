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
#include <string>
#include <vector>

#include "holq/base_theory.hpp"
#include "holq/error.hpp"
#include "holq/parser.hpp"
#include "holq/printer.hpp"
#include "holq/typecheck.hpp"
#include "support/gen.hpp"

using namespace holq;

namespace {

std::string principal(const std::string& src, const TheoryEnv& env) {
  return canonical_instance(elaborate(parse_term(src, env), env).type);
}

std::string principal(const std::string& src) {
  return principal(src, TheoryEnv::kernel());
}

}  // namespace

TEST_CASE("unify: soundness on random type pairs") {
  gen::Rng r(42);
  int unified = 0;
  for (int k = 0; k < 2000; ++k) {
    TypePtr a = gen::random_type(r, 3);
    TypePtr b = gen::random_type(r, 3);
    TypeSubst s;
    try {
      unify(a, b, s);
    } catch (const type_error&) {
      continue;
    }
    ++unified;
    CHECK(type_equal(s.apply(a), s.apply(b)));
  }
  CHECK(unified > 100);
}

TEST_CASE("unify: occurs check rejects 'a ~ 'a -> o") {
  TypeSubst s;
  CHECK_THROWS_AS(unify(ty_var("a"), ty_arrow(ty_var("a"), ty_o()), s),
                  type_error);
}

TEST_CASE("unify: base type clash") {
  TypeSubst s;
  CHECK_THROWS_AS(unify(ty_base("i"), ty_o(), s), type_error);
}

TEST_CASE("unify: substitutions are idempotent on the result") {
  gen::Rng r(43);
  for (int k = 0; k < 500; ++k) {
    TypePtr a = gen::random_type(r, 3);
    TypePtr b = gen::random_type(r, 3);
    TypeSubst s;
    try {
      unify(a, b, s);
    } catch (const type_error&) {
      continue;
    }
    TypePtr once = s.apply(a);
    CHECK(type_equal(once, s.apply(once)));
  }
}

TEST_CASE("principal types: curated corpus") {
  // applyTwice and friends; canonical_instance renames schematics so
  // distinct sources with the same shape compare equal.
  CHECK(principal("\\f:'a -> 'a. \\x:'a. f (f x)") ==
        canonical_instance(parse_type("('a -> 'a) -> 'a -> 'a")));
  CHECK(principal("\\x:'a. x") == canonical_instance(parse_type("'a -> 'a")));
  CHECK(principal("\\x:'a. \\y:'b. x") ==
        canonical_instance(parse_type("'a -> 'b -> 'a")));
  CHECK(principal("\\f:'b -> 'c. \\g:'a -> 'b. \\x:'a. f (g x)") ==
        canonical_instance(parse_type("('b -> 'c) -> ('a -> 'b) -> 'a -> 'c")));
  // Schematic annotations resolve through unification.
  CHECK(principal("\\x:'a. x = x") == canonical_instance(parse_type("'a -> o")));
  CHECK(principal("\\p:'a. \\q:'b. p = q") ==
        canonical_instance(parse_type("'a -> 'a -> o")));
  CHECK(principal("Q") == canonical_instance(parse_type("'a -> 'a -> o")));
  CHECK(principal("x = y") == "o");
}

TEST_CASE("self application is a type error") {
  // Simple types forbid self-application: 'a ~ 'a -> 'b fails occurs check.
  CHECK_THROWS_AS(infer_type(parse_term("\\x:'a. x x"), TheoryEnv::kernel()),
                  type_error);
}

TEST_CASE("binder annotations are mandatory in concrete syntax") {
  CHECK_THROWS_AS(parse_term("\\x. x"), parse_error);
}

TEST_CASE("binder annotations participate in unification") {
  // A conflicting annotation is a unification failure, not an override.
  CHECK_THROWS_AS(
      infer_type(parse_term("(\\x:o. x) (\\y:i. y)"), TheoryEnv::kernel()),
      type_error);
  // A consistent annotation pins the schematic.
  CHECK(principal("\\x:o. x = x") == "o -> o");
}

TEST_CASE("elaborate: determinism and full annotation") {
  gen::Rng r(7);
  gen::TypedPool pool = gen::TypedPool::standard();
  TheoryEnv env = TheoryEnv::kernel();
  for (int k = 0; k < 300; ++k) {
    TermPtr t = gen::random_typed_term(r, pool);
    Elaborated e1 = elaborate(t, env);
    Elaborated e2 = elaborate(t, env);
    CHECK(alpha_equal(e1.term, e2.term));
    CHECK(type_equal(e1.type, e2.type));
    CHECK(show_type(e1.type) == show_type(e2.type));
  }
}

TEST_CASE("elaborate: occurrences report resolved instances") {
  TheoryEnv env = TheoryEnv::kernel();
  std::vector<Occurrence> occ;
  TermPtr t = parse_term("(x = y) = (f = g)", env);
  elaborate(t, env, &occ);
  REQUIRE(occ.size() == 3);
  for (const auto& o : occ) CHECK(o.const_name == "Q");
  // The outer equality is at type o; the inner two stay schematic but share
  // one instance shape each.
  CHECK(canonical_instance(occ[0].instance_type) ==
        canonical_instance(parse_type("o -> o -> o")));
}

TEST_CASE("distinct instantiations of Q inside one term") {
  TheoryEnv env = TheoryEnv::kernel();
  // Inner equalities at i and at o -> o; outer at o.  Three distinct
  // instances of the one constant Q in a single term.
  TermPtr t = parse_term("((c:i) = d) = ((g:o -> o) = g)", env);
  InstantiationDemo demo = check_distinct_instantiation_demo(t, env);
  CHECK(demo.distinct("Q") == 3);
  CHECK(demo.occurrences.size() == 3);
  CHECK(demo.render().find("Q") != std::string::npos);
}

TEST_CASE("zonk: elaborated terms carry no unresolved hints") {
  TheoryEnv env = TheoryEnv::kernel();
  Elaborated e = elaborate(parse_term("(\\x:'a. x) (y = z)", env), env);
  // Every binder in the elaborated term is annotated.
  std::function<void(const TermPtr&)> walk = [&](const TermPtr& t) {
    if (!t) return;
    if (t->kind == Term::Kind::Lam) {
      CHECK(t->ty != nullptr);
      walk(t->sub);
    } else if (t->kind == Term::Kind::App) {
      walk(t->sub);
      walk(t->arg);
    }
  };
  walk(e.term);
  CHECK(show_type(e.type) == "o");
}

TEST_CASE("inference over generated well-typed terms never throws") {
  gen::Rng r(11);
  gen::TypedPool pool = gen::TypedPool::standard();
  for (int k = 0; k < 1000; ++k) {
    TermPtr t = gen::random_typed_term(r, pool);
    CHECK_NOTHROW(infer_type(t, TheoryEnv::kernel()));
  }
}

TEST_CASE("canonical_instance: stable under renaming") {
  CHECK(canonical_instance(parse_type("'x -> 'y -> 'x")) ==
        canonical_instance(parse_type("'p -> 'q -> 'p")));
  CHECK(canonical_instance(parse_type("'x -> 'y")) !=
        canonical_instance(parse_type("'x -> 'x")));
}
