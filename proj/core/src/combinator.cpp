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

#include "holq/combinator.hpp"

#include "holq/error.hpp"
#include "holq/parser.hpp"

namespace holq {

const TheoryEnv& comb_env() {
  static const TheoryEnv env = [] {
    TheoryEnv e = TheoryEnv::kernel();
    // Untyped combinator constants; the scheme is a lone variable so they
    // are never rejected, but they are meant for unchecked reduction only.
    for (const char* n : {"S", "C", "I", "T", "Z", "U"})
      e.sig.term_consts[n] =
          ConstInfo{TypeScheme{{"u"}, ty_var("u")}, ConstOrigin::Declared};
    return e;
  }();
  return env;
}

bool is_comb_term(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
    case Term::Kind::Const: return true;
    case Term::Kind::App: return is_comb_term(t->sub) && is_comb_term(t->arg);
    case Term::Kind::Lam: return false;
  }
  return false;
}

TermPtr parse_comb(const std::string& src) {
  TermPtr t = parse_term(src, comb_env(), false);
  if (!is_comb_term(t))
    throw theory_error("combinator terms are application-only");
  return t;
}

namespace {

int comb_arity(const std::string& n) {
  if (n == "I") return 1;
  if (n == "C") return 2;
  if (n == "T" || n == "Z" || n == "S") return 3;
  return -1;  // U and anything else: inert
}

// Contract the redex at the spine root, if any.
bool step_root(const TermPtr& t, TermPtr& out) {
  std::vector<TermPtr> args;
  TermPtr curp = t;
  while (curp->kind == Term::Kind::App) {
    args.push_back(curp->arg);
    curp = curp->sub;
  }
  std::reverse(args.begin(), args.end());
  if (curp->kind != Term::Kind::Const) return false;
  int ar = comb_arity(curp->name);
  if (ar < 0 || (int)args.size() < ar) return false;

  TermPtr head;
  const std::string& n = curp->name;
  if (n == "I") head = args[0];                                    // I x = x
  else if (n == "C") head = args[0];                               // C x y = x
  else if (n == "T") head = mk_app(args[0], args[2], args[1]);     // T f x y = f y x
  else if (n == "Z") head = mk_app(args[0], mk_app(args[1], args[2]));  // Z f g x = f (g x)
  else head = mk_app(mk_app(args[0], args[2]), mk_app(args[1], args[2]));  // S f g x = f x (g x)

  for (std::size_t i = ar; i < args.size(); ++i) head = mk_app(head, args[i]);
  out = head;
  return true;
}

// Leftmost-outermost single step.
bool step(const TermPtr& t, TermPtr& out) {
  if (step_root(t, out)) return true;
  if (t->kind != Term::Kind::App) return false;
  TermPtr part;
  if (step(t->sub, part)) {
    out = mk_app(part, t->arg);
    return true;
  }
  if (step(t->arg, part)) {
    out = mk_app(t->sub, part);
    return true;
  }
  return false;
}

}  // namespace

TermPtr combinator_reduce(const TermPtr& t, std::uint64_t fuel) {
  if (!is_comb_term(t))
    throw theory_error("combinator terms are application-only");
  TermPtr cur = t;
  TermPtr nxt;
  while (step(cur, nxt)) {
    if (fuel == 0)
      throw reduction_error("combinator fuel exhausted (divergent term?)");
    --fuel;
    cur = nxt;
  }
  return cur;
}

TermPtr bracket_abstract(const TermPtr& t, const std::string& x) {
  if (!is_comb_term(t))
    throw theory_error("combinator terms are application-only");
  auto S = [] { return mk_const("S"); };
  auto C = [] { return mk_const("C"); };
  if (t->kind == Term::Kind::Var && t->name == x)
    return mk_app(mk_app(S(), C()), C());  // I = S C C
  if (!free_vars(t).count(x)) return mk_app(C(), t);
  // x occurs and t != x, so t is an application.
  return mk_app(mk_app(S(), bracket_abstract(t->sub, x)),
                bracket_abstract(t->arg, x));
}

}  // namespace holq
