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

#include "holq/base_theory.hpp"
#include "holq/combinator.hpp"
#include "holq/embeddings.hpp"
#include "holq/error.hpp"
#include "holq/parser.hpp"
#include "holq/printer.hpp"
#include "holq/reduction.hpp"
#include "holq/typecheck.hpp"
#include "support/gen.hpp"

using namespace holq;

namespace {

const TheoryEnv& church() {
  static TheoryEnv env = load_embedding(TheoryEnv::kernel(), church_pack());
  return env;
}

bool church_eq(const std::string& a, const std::string& b) {
  return betaeta_equal(parse_term(a, church()), parse_term(b, church()),
                       church());
}

// True iff nf contains an eta redex \x. M x with x not free in M.
bool has_eta_redex(const TermPtr& t) {
  if (!t) return false;
  if (t->kind == Term::Kind::Lam) {
    const TermPtr& b = t->sub;
    if (b->kind == Term::Kind::App && b->arg->kind == Term::Kind::Var &&
        b->arg->name == t->name && free_vars(b->sub).count(t->name) == 0)
      return true;
    return has_eta_redex(t->sub);
  }
  if (t->kind == Term::Kind::App)
    return has_eta_redex(t->sub) || has_eta_redex(t->arg);
  return false;
}

}  // namespace

TEST_CASE("church: conditional on booleans") {
  CHECK(church_eq("if_s true_s t e", "t"));
  CHECK(church_eq("if_s false_s t e", "e"));
  // The conditional itself collapses to application order.
  CHECK(church_eq("if_s", "\\c:'a -> 'b -> 'c. \\t:'a. \\e:'b. c t e"));
}

TEST_CASE("church: projections extract pair components") {
  CHECK(church_eq("pi1 (pair x y)", "x"));
  CHECK(church_eq("pi2 (pair x y)", "y"));
}

TEST_CASE("church: negation table") {
  CHECK(church_eq("not_s true_s", "false_s"));
  CHECK(church_eq("not_s false_s", "true_s"));
  CHECK(church_eq("not_s", "\\b:('a -> 'b -> 'b) -> ('c -> 'd -> 'c) -> 'e. b false_s true_s"));
}

TEST_CASE("church: conjunction and disjunction tables") {
  CHECK(church_eq("and_s true_s b", "b"));
  CHECK(church_eq("and_s false_s b", "false_s"));
  CHECK(church_eq("or_s true_s b", "true_s"));
  CHECK(church_eq("or_s false_s b", "b"));
}

TEST_CASE("church: surjective pairing fails") {
  CHECK_FALSE(church_eq("pair (pi1 p) (pi2 p)", "p"));
}

TEST_CASE("church: De Morgan holds exactly on boolean instantiations") {
  const char* bools[2] = {"true_s", "false_s"};
  for (const char* a : bools)
    for (const char* b : bools) {
      std::string lhs = std::string("not_s (and_s ") + a + " " + b + ")";
      std::string rhs =
          std::string("or_s (not_s ") + a + ") (not_s " + b + ")";
      CHECK(church_eq(lhs, rhs));
    }
  // A well-typed non-boolean instantiation where the two sides differ:
  // free variables of schematic type.
  CHECK_FALSE(church_eq("not_s (and_s a b)", "or_s (not_s a) (not_s b)"));
}

TEST_CASE("church: De Morgan instance forces distinct types on true_s") {
  TermPtr dm = parse_term("or_s (not_s true_s) (not_s true_s)", church());
  InstantiationDemo demo = check_distinct_instantiation_demo(dm, church());
  CHECK(demo.distinct("true_s") >= 2);
  CHECK(demo.distinct("not_s") >= 2);
}

TEST_CASE("normalize: eta contraction") {
  TheoryEnv env = TheoryEnv::kernel();
  TermPtr t = parse_term("\\x:o. f x", env);
  CHECK(alpha_equal(beta_normalize(elaborate(t, env).term), mk_var("f")));
  // Not an eta redex when x occurs in the head.
  TermPtr keep = parse_term("\\x:o -> o. x x'", env);
  TermPtr nf = beta_normalize(elaborate(keep, env).term);
  CHECK(nf->kind == Term::Kind::Lam);
}

TEST_CASE("normalize: beta-only mode keeps eta redexes") {
  TheoryEnv env = TheoryEnv::kernel();
  TermPtr t = elaborate(parse_term("\\x:o. f x", env), env).term;
  TermPtr nf = beta_normalize(t, NormMode::Beta);
  CHECK(nf->kind == Term::Kind::Lam);
}

TEST_CASE("eta postcondition on generated terms") {
  gen::Rng r(61);
  gen::TypedPool pool = gen::TypedPool::standard();
  for (int k = 0; k < 500; ++k) {
    TermPtr t = gen::random_typed_term(r, pool);
    TermPtr nf = beta_normalize(elaborate(t, TheoryEnv::kernel()).term);
    CAPTURE(show_term(t));
    CHECK_FALSE(has_eta_redex(nf));
  }
}

TEST_CASE("two-strategy confluence on generated well-typed terms") {
  gen::Rng r(62);
  gen::TypedPool pool = gen::TypedPool::standard();
  for (int k = 0; k < 500; ++k) {
    TermPtr t = elaborate(gen::random_typed_term(r, pool, 6),
                          TheoryEnv::kernel()).term;
    TermPtr a = beta_normalize(t, NormMode::Beta);
    TermPtr b = beta_normalize_applicative(t);
    CAPTURE(show_term(t));
    CHECK(alpha_equal(a, b));
  }
}

TEST_CASE("unfold: definitional expansion over the equality-only base") {
  const TheoryEnv& env = q0_env();
  TermPtr t = elaborate(parse_term("and p q", env), env).term;
  TermPtr u = unfold(t, env);
  // Andrews' truth-table encoding applied to p and q: only Q remains.
  std::function<void(const TermPtr&)> only_q = [&](const TermPtr& s) {
    if (!s) return;
    if (s->kind == Term::Kind::Const) CHECK(s->name == "Q");
    if (s->kind == Term::Kind::Lam) only_q(s->sub);
    if (s->kind == Term::Kind::App) {
      only_q(s->sub);
      only_q(s->arg);
    }
  };
  only_q(u);
  CHECK(free_vars(u).count("p") == 1);
  CHECK(free_vars(u).count("q") == 1);
}

TEST_CASE("unfold: modality expands to its quantified guard") {
  TheoryEnv base = q0_env();
  declare_type(base, "w");
  TheoryEnv env = load_embedding(base, modal_pack());
  TermPtr t = elaborate(parse_term("box R p w'", env), env).term;
  TermPtr expanded = beta_normalize(unfold(t, env, {"box"}));
  TermPtr expect = beta_normalize(
      unfold(elaborate(parse_term("forall (\\v:w. imp (R (w' : w) v) (p v))",
                                  env),
                       env).term, env, {"forall", "imp"}));
  // Expand the remaining abbreviations on both sides and compare.
  CHECK(betaeta_equal(unfold(expanded, env), unfold(expect, env), env));
}

TEST_CASE("unfold: no defined constants means identity") {
  TheoryEnv env = TheoryEnv::kernel();
  TermPtr t = elaborate(parse_term("\\x:o. x = y", env), env).term;
  CHECK(alpha_equal(unfold(t, env), t));
}

TEST_CASE("unfold: unknown name in the restriction set") {
  const TheoryEnv& env = q0_env();
  TermPtr t = elaborate(parse_term("and p q", env), env).term;
  CHECK_THROWS(unfold(t, env, {"no_such_def"}));
}

TEST_CASE("combinators: five defining equations on symbolic arguments") {
  auto reduces_to = [](const std::string& lhs, const std::string& rhs) {
    return alpha_equal(combinator_reduce(parse_comb(lhs)),
                       combinator_reduce(parse_comb(rhs)));
  };
  CHECK(reduces_to("I x", "x"));
  CHECK(reduces_to("C x y", "x"));
  CHECK(reduces_to("T f x y", "f y x"));
  CHECK(reduces_to("Z f g x", "f (g x)"));
  CHECK(reduces_to("S f g x", "f x (g x)"));
}

TEST_CASE("combinators: I is definable from S and C") {
  CHECK(alpha_equal(combinator_reduce(parse_comb("S C C x")), mk_var("x")));
}

TEST_CASE("combinators: U is inert") {
  TermPtr t = parse_comb("U f g");
  CHECK(alpha_equal(combinator_reduce(t), t));
}

TEST_CASE("combinators: fuel exhaustion on divergent terms") {
  // W W where W = S I I self-applies forever.
  CHECK_THROWS_AS(combinator_reduce(parse_comb("S I I (S I I)")),
                  reduction_error);
}

TEST_CASE("bracket abstraction: displayed cases") {
  TermPtr scc = bracket_abstract(mk_var("x"), "x");
  CHECK(show_term(scc) == "S C C");
  CHECK(alpha_equal(combinator_reduce(mk_app(scc, mk_var("x"))), mk_var("x")));

  TermPtr cy = bracket_abstract(mk_var("y"), "x");
  CHECK(show_term(cy) == "C y");
  CHECK(alpha_equal(combinator_reduce(mk_app(cy, mk_var("x"))), mk_var("y")));

  TermPtr fxx = parse_comb("f x x");
  TermPtr abs = bracket_abstract(fxx, "x");
  CHECK(free_vars(abs).count("x") == 0);
  CHECK(alpha_equal(combinator_reduce(mk_app(abs, mk_var("a"))),
                    combinator_reduce(parse_comb("f a a"))));
}

TEST_CASE("bracket abstraction: correctness on random combinator terms") {
  gen::Rng r(63);
  int checked = 0;
  for (int k = 0; k < 500; ++k) {
    TermPtr t = gen::random_comb(r);
    TermPtr abs = bracket_abstract(t, "x");
    CHECK(free_vars(abs).count("x") == 0);
    TermPtr lhs, rhs;
    try {
      lhs = combinator_reduce(mk_app(abs, mk_var("x")));
      rhs = combinator_reduce(t);
    } catch (const reduction_error&) {
      continue;  // divergent generated term; skip, don't count
    }
    CAPTURE(show_term(t));
    CHECK(alpha_equal(lhs, rhs));
    ++checked;
  }
  CHECK(checked > 400);
}

TEST_CASE("combinator terms reject binders") {
  CHECK_THROWS_AS(combinator_reduce(parse_term("\\x:o. x")), theory_error);
}
