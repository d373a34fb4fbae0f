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

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "holq/base_theory.hpp"
#include "holq/boolalg.hpp"
#include "holq/embeddings.hpp"
#include "holq/error.hpp"
#include "holq/parser.hpp"
#include "holq/printer.hpp"
#include "holq/reduction.hpp"
#include "holq/semantics.hpp"
#include "holq/typecheck.hpp"

using namespace holq;

namespace {

const TheoryEnv& qi() {
  static TheoryEnv env = [] {
    TheoryEnv e = q0_env();
    declare_type(e, "i");
    return e;
  }();
  return env;
}

Model standard_model(std::uint64_t i_size) {
  Model m;
  m.frame.bases["i"] = i_size;
  m.sig = &qi().sig;
  return m;
}

// Elaborate, unfold all definitions, and evaluate under {p,q} -> {a,b}.
std::uint64_t eval_pq(const std::string& src, bool p, bool q,
                      const Model& m) {
  TermPtr t = unfold(elaborate(parse_term(src, qi()), qi()).term, qi());
  Valuation v{{"p", Elem{ty_o(), p ? 1u : 0u}},
              {"q", Elem{ty_o(), q ? 1u : 0u}}};
  Elem r = denote(t, m, v);
  REQUIRE(type_equal(r.ty, ty_o()));
  return r.idx;
}

}  // namespace

TEST_CASE("enumerate_domain: counts and determinism") {
  Frame f;
  f.bases["i"] = 3;
  CHECK(enumerate_domain(ty_o(), f).size() == 2);
  CHECK(enumerate_domain(parse_type("i -> o"), f).size() == 8);
  CHECK(enumerate_domain(parse_type("o -> o -> o"), f).size() == 16);
  // Deterministic, duplicate-free ordering by index.
  auto dom = enumerate_domain(parse_type("i -> o"), f);
  std::set<std::uint64_t> seen;
  for (std::size_t k = 0; k < dom.size(); ++k) {
    CHECK(dom[k].idx == k);
    seen.insert(dom[k].idx);
  }
  CHECK(seen.size() == dom.size());
}

TEST_CASE("enumerate_domain: cap exceeded is loud") {
  Frame f;
  f.bases["i"] = 3;
  f.cap = 100;
  CHECK_THROWS_AS(enumerate_domain(parse_type("(i -> o) -> i -> o"), f),
                  cap_error);
}

TEST_CASE("denote: ground connective values") {
  Model m = standard_model(1);
  TermPtr t = unfold(elaborate(parse_term("not true", qi()), qi()).term, qi());
  CHECK(denote(t, m, {}).idx == 0);
  t = unfold(elaborate(parse_term("true | false", qi()), qi()).term, qi());
  CHECK(denote(t, m, {}).idx == 1);
}

TEST_CASE("denote: identity function table") {
  Model m = standard_model(3);
  TermPtr t = elaborate(parse_term("\\x:i. x", qi()), qi()).term;
  Elem f = denote(t, m, {});
  for (const Elem& e : enumerate_domain(ty_base("i"), m.frame))
    CHECK(apply_elem(m.frame, f, e).idx == e.idx);
}

TEST_CASE("the sixteen binary truth tables") {
  // Expressions for every binary Boolean function, with the expected
  // value rows listed over (p,q) = (T,T),(T,F),(F,T),(F,F).
  struct Row {
    const char* expr;
    bool tt, tf, ft, ff;
  } rows[] = {
      {"false", false, false, false, false},
      {"p & q", true, false, false, false},
      {"p & not q", false, true, false, false},
      {"p", true, true, false, false},
      {"not p & q", false, false, true, false},
      {"q", true, false, true, false},
      {"(p : o) != q", false, true, true, false},
      {"p | q", true, true, true, false},
      {"not (p | q)", false, false, false, true},
      {"(p : o) = q", true, false, false, true},
      {"not q", false, true, false, true},
      {"p | not q", true, true, false, true},
      {"not p", false, false, true, true},
      {"p -> q", true, false, true, true},
      {"not (p & q)", false, true, true, true},
      {"true", true, true, true, true},
  };
  for (std::uint64_t n = 1; n <= 3; ++n) {
    Model m = standard_model(n);
    for (const auto& r : rows) {
      CAPTURE(r.expr);
      CAPTURE(n);
      CHECK(eval_pq(r.expr, true, true, m) == (r.tt ? 1 : 0));
      CHECK(eval_pq(r.expr, true, false, m) == (r.tf ? 1 : 0));
      CHECK(eval_pq(r.expr, false, true, m) == (r.ft ? 1 : 0));
      CHECK(eval_pq(r.expr, false, false, m) == (r.ff ? 1 : 0));
    }
  }
}

TEST_CASE("Leibniz equality agrees with primitive equality at small sizes") {
  TermPtr L = leibniz_eq(ty_base("i"));
  TermPtr goal = parse_term(
      "((" + show_term(L) + ") x y) = ((x : i) = y)", qi());
  for (std::uint64_t n = 1; n <= 3; ++n) {
    ValidityResult r = check_valid(goal, qi(), uniform_sizes(qi(), n));
    CAPTURE(n);
    CHECK(r.valid);
  }
}

TEST_CASE("universal quantifier denotes constant-top comparison") {
  TermPtr t = unfold(
      elaborate(parse_term("forall (P : i -> o)", qi()), qi()).term, qi());
  for (std::uint64_t n = 1; n <= 3; ++n) {
    Model m = standard_model(n);
    for (const Elem& P : enumerate_domain(parse_type("i -> o"), m.frame)) {
      bool all_top = true;
      for (const Elem& x : enumerate_domain(ty_base("i"), m.frame))
        all_top = all_top && apply_elem(m.frame, P, x).idx == 1;
      Valuation v{{"P", P}};
      CHECK(denote(t, m, v).idx == (all_top ? 1u : 0u));
    }
  }
}

TEST_CASE("check_valid: classical De Morgan with defined connectives") {
  TermPtr goal = parse_term("(not (p & q)) = (not p | not q)", qi());
  for (std::uint64_t n = 1; n <= 3; ++n)
    CHECK(check_valid(goal, qi(), uniform_sizes(qi(), n)).valid);
}

TEST_CASE("check_valid: countermodel for an invalid implication") {
  TermPtr goal = parse_term("p | q -> p", qi());
  ValidityResult r = check_valid(goal, qi(), uniform_sizes(qi(), 1));
  REQUIRE_FALSE(r.valid);
  REQUIRE(r.counter.has_value());
  // First countermodel in enumeration order: p false, q true.
  CHECK(r.counter->val.at("p").idx == 0);
  CHECK(r.counter->val.at("q").idx == 1);
}

TEST_CASE("check_valid: countermodels are deterministic") {
  TermPtr goal = parse_term("(f : i -> o) x -> f y", qi());
  ValidityResult r1 = check_valid(goal, qi(), uniform_sizes(qi(), 2));
  ValidityResult r2 = check_valid(goal, qi(), uniform_sizes(qi(), 2));
  REQUIRE_FALSE(r1.valid);
  REQUIRE_FALSE(r2.valid);
  CHECK(render_countermodel(*r1.counter, "") ==
        render_countermodel(*r2.counter, ""));
  CHECK(r1.models_checked == r2.models_checked);
}

TEST_CASE("check_valid: axioms filter the model class") {
  TheoryEnv env = qi();
  declare_const(env, "c", TypeScheme::close_over(ty_o()));
  // Unconstrained: c is not always true.
  CHECK_FALSE(check_valid(parse_term("c", env), env,
                          uniform_sizes(env, 1)).valid);
  // With an axiom pinning c, it is.
  add_axiom(env, "c_holds", parse_term("c", env));
  CHECK(check_valid(parse_term("c", env), env, uniform_sizes(env, 1)).valid);
}

TEST_CASE("check_valid: schematic goals are rejected") {
  // A bare polymorphic equation has no finite instance to enumerate.
  CHECK_THROWS(check_valid(parse_term("x = x", qi()), qi(),
                           uniform_sizes(qi(), 1)));
}

TEST_CASE("countermodel rendering lists bases, constants, and valuation") {
  TheoryEnv env = qi();
  declare_const(env, "R", TypeScheme::close_over(
      parse_type("i -> i -> o")));
  TermPtr goal = parse_term("R x y", env);
  ValidityResult r = check_valid(goal, env, uniform_sizes(env, 2));
  REQUIRE_FALSE(r.valid);
  std::string text = render_countermodel(*r.counter, "  ");
  CHECK(text.find("base i") != std::string::npos);
  CHECK(text.find("const R") != std::string::npos);
  CHECK(text.find("var x") != std::string::npos);
  CHECK(text.find("var y") != std::string::npos);
  CHECK(text.find("sizes: i=2") != std::string::npos);
}

TEST_CASE("frame correspondence: the classical ladder at three worlds") {
  TheoryEnv env = [] {
    TheoryEnv e = q0_env();
    declare_type(e, "w");
    TheoryEnv m = load_embedding(e, modal_pack());
    declare_const(m, "R", TypeScheme::close_over(parse_type("w -> w -> o")));
    return m;
  }();
  auto schema = [&](const std::string& s) { return parse_term(s, env); };

  FrameReport t = frame_correspondence(
      schema("mvalid (imps (box R p) p)"), FrameProp::Reflexive, 3, env);
  CHECK(t.equivalent());
  CHECK(t.frames_checked == 2 + 16 + 512);

  FrameReport four = frame_correspondence(
      schema("mvalid (imps (box R p) (box R (box R p)))"),
      FrameProp::Transitive, 3, env);
  CHECK(four.equivalent());

  FrameReport b = frame_correspondence(
      schema("mvalid (imps p (box R (dia R p)))"), FrameProp::Symmetric, 3,
      env);
  CHECK(b.equivalent());

  FrameReport k = frame_correspondence(
      schema("mvalid (imps (box R (imps p q)) (imps (box R p) (box R q)))"),
      FrameProp::None, 3, env);
  CHECK(k.equivalent());

  FrameReport five = frame_correspondence(
      schema("mvalid (imps (dia R p) (box R (dia R p)))"),
      FrameProp::Euclidean, 3, env);
  CHECK(five.equivalent());

  // A mismatching pairing is reported, not silently accepted: the T schema
  // does not correspond to symmetry.
  FrameReport bad = frame_correspondence(
      schema("mvalid (imps (box R p) p)"), FrameProp::Symmetric, 2, env);
  CHECK_FALSE(bad.equivalent());
  CHECK_FALSE(bad.mismatches.empty());
}

TEST_CASE("boolean algebra: lattice laws at one to three atoms") {
  for (unsigned k = 1; k <= 3; ++k) {
    BoolAlg alg(k);
    for (std::uint64_t a = 0; a < alg.size(); ++a) {
      CHECK(alg.cmpl(alg.cmpl(a)) == a);
      CHECK(alg.iff(a, a) == alg.top());
      CHECK(alg.meet(a, alg.top()) == a);
      CHECK(alg.join(a, BoolAlg::bottom) == a);
      for (std::uint64_t b = 0; b < alg.size(); ++b) {
        CHECK(alg.cmpl(alg.meet(a, b)) ==
              alg.join(alg.cmpl(a), alg.cmpl(b)));
        CHECK(alg.leq(alg.meet(a, b), a));
        CHECK(alg.leq(a, alg.join(a, b)));
        CHECK(alg.imp(a, b) == alg.join(alg.cmpl(a), b));
      }
    }
  }
  CHECK(BoolAlg(2).show(0) == "{}");
}

TEST_CASE("validate_q: accepts lawful candidates") {
  BoolAlg alg(2);
  CHECK(validate_q(crisp_q(3, alg), alg).ok);

  QFunction constant_top;
  constant_top.table.assign(3, std::vector<std::uint64_t>(3, alg.top()));
  CHECK(validate_q(constant_top, alg).ok);
}

TEST_CASE("validate_q: rejects violators with witnesses") {
  BoolAlg alg(2);

  QFunction not_reflexive = crisp_q(3, alg);
  not_reflexive.table[1][1] = 1;  // a proper subelement, not top
  QValidation r1 = validate_q(not_reflexive, alg);
  CHECK_FALSE(r1.ok);
  CHECK(r1.violation.find("1") != std::string::npos);

  QFunction not_commutative = crisp_q(3, alg);
  not_commutative.table[0][1] = alg.top();  // but [1][0] stays bottom
  QValidation r2 = validate_q(not_commutative, alg);
  CHECK_FALSE(r2.ok);
  CHECK_FALSE(r2.violation.empty());

  QFunction not_transitive = crisp_q(3, alg);
  // q(0,1) and q(0,2) high but q(1,2) low violates graded transitivity.
  not_transitive.table[0][1] = not_transitive.table[1][0] = alg.top();
  not_transitive.table[0][2] = not_transitive.table[2][0] = alg.top();
  QValidation r3 = validate_q(not_transitive, alg);
  CHECK_FALSE(r3.ok);
  CHECK_FALSE(r3.violation.empty());
}

TEST_CASE("eval_bvalued: ground truths and crisp degeneration") {
  BoolAlg alg2(2);
  QFunction q = crisp_q(2, alg2);
  Elem t = eval_bvalued(parse_term("true", qi()), qi(), alg2, "i", 2, q);
  CHECK(t.idx == alg2.top());
  Elem f = eval_bvalued(parse_term("false", qi()), qi(), alg2, "i", 2, q);
  CHECK(f.idx == BoolAlg::bottom);

  // One atom: the algebra is the two-element one, and evaluation agrees
  // element-for-element with the standard semantics.
  BoolAlg alg1(1);
  QFunction q1 = crisp_q(2, alg1);
  Model m = standard_model(2);
  const char* corpus[] = {
      "true", "false", "not true", "not false",
      "true & false", "true | false", "true -> false", "false -> true",
      "(true = false) = false", "forall (\\x:i. x = x)",
      "exists (\\x:i. x = x)", "forall (\\x:i. (x = x) = true)",
      "not (true & (false | true)) = (not true | not (false | true))",
      "U (\\x:i. true) (\\x:i. false)",
      "(\\x:o. x) true", "(\\x:o. not x) false",
      "exists (\\f:i -> o. forall (\\x:i. f x))",
      "forall (\\f:i -> o. exists (\\x:i. f x) | forall (\\x:i. not (f x)))",
      "(true | false) & not false", "D true false",
  };
  int compared = 0;
  for (const char* src : corpus) {
    TermPtr raw = parse_term(src, qi());
    Elem bv = eval_bvalued(raw, qi(), alg1, "i", 2, q1);
    TermPtr el = unfold(elaborate(raw, qi()).term, qi());
    Elem st = denote(el, m, {});
    CAPTURE(src);
    CHECK(bv.idx == st.idx);
    ++compared;
  }
  CHECK(compared == 20);
}

TEST_CASE("eval_bvalued: invalid q is rejected before evaluation") {
  BoolAlg alg(2);
  QFunction bad = crisp_q(2, alg);
  bad.table[0][0] = BoolAlg::bottom;
  CHECK_THROWS(eval_bvalued(parse_term("true", qi()), qi(), alg, "i", 2, bad));
}

TEST_CASE("eval_bvalued: equality laws under a non-crisp q") {
  // Indiscerptible pair: q(0,1) = one atom of a two-atom algebra.
  BoolAlg alg(2);
  QFunction q = crisp_q(2, alg);
  q.table[0][1] = q.table[1][0] = 1;  // atom {a0}
  REQUIRE(validate_q(q, alg).ok);
  // Reflexivity stays top.
  Elem r = eval_bvalued(parse_term("forall (\\x:i. x = x)", qi()), qi(),
                        alg, "i", 2, q);
  CHECK(r.idx == alg.top());
  // Symmetry as a graded law: (x=y) = (y=x) denotes top.
  Elem s = eval_bvalued(
      parse_term("forall (\\x:i. forall (\\y:i. ((x = y) = (y = x))))", qi()),
      qi(), alg, "i", 2, q);
  CHECK(s.idx == alg.top());
}
