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

#include "holq/theory.hpp"

#include <algorithm>

#include "holq/error.hpp"
#include "holq/typecheck.hpp"

namespace holq {

TypeScheme TypeScheme::close_over(const TypePtr& t) {
  TypeScheme s;
  collect_type_vars(t, s.vars);
  s.body = t;
  return s;
}

TypePtr instantiate(const TypeScheme& s, const std::vector<TypePtr>& args) {
  if (args.size() != s.vars.size())
    throw type_error("scheme expects " + std::to_string(s.vars.size()) +
                     " type arguments, got " + std::to_string(args.size()));
  std::map<std::string, TypePtr> m;
  for (std::size_t i = 0; i < args.size(); ++i) m[s.vars[i]] = args[i];
  return apply_type_map(s.body, m);
}

std::string show_scheme(const TypeScheme& s) { return show_type(s.body); }

Signature Signature::kernel() {
  Signature sig;
  sig.type_consts.insert("o");
  TypePtr a = ty_var("a");
  sig.term_consts["Q"] =
      ConstInfo{TypeScheme{{"a"}, ty_arrow(a, ty_arrow(a, ty_o()))},
                ConstOrigin::Primitive};
  return sig;
}

const ConstInfo* Signature::find_const(const std::string& n) const {
  auto it = term_consts.find(n);
  return it == term_consts.end() ? nullptr : &it->second;
}

const InfixSpec* NotationTable::find_symbol(const std::string& sym) const {
  for (const auto& s : infixes)
    if (s.symbol == sym) return &s;
  return nullptr;
}

const InfixSpec* NotationTable::find_const(const std::string& name) const {
  for (const auto& s : infixes)
    if (s.const_name == name) return &s;
  return nullptr;
}

TheoryEnv TheoryEnv::kernel() {
  TheoryEnv env;
  env.sig = Signature::kernel();
  return env;
}

const Definition* TheoryEnv::find_def(const std::string& n) const {
  auto it = def_index.find(n);
  return it == def_index.end() ? nullptr : &defs[it->second];
}

void declare_type(TheoryEnv& env, const std::string& name) {
  if (env.sig.has_type(name))
    throw theory_error("type '" + name + "' is already declared");
  env.sig.type_consts.insert(name);
}

static void check_scheme_types_known(const TheoryEnv& env, const TypePtr& t,
                                     const std::string& what) {
  if (!t) return;
  if (t->kind == Type::Kind::Base && !env.sig.has_type(t->name))
    throw theory_error(what + " mentions unknown type '" + t->name + "'");
  check_scheme_types_known(env, t->dom, what);
  check_scheme_types_known(env, t->cod, what);
}

void declare_const(TheoryEnv& env, const std::string& name, const TypeScheme& scheme) {
  if (env.sig.find_const(name))
    throw theory_error("constant '" + name + "' is already declared");
  check_scheme_types_known(env, scheme.body, "constant '" + name + "'");
  env.sig.term_consts[name] = ConstInfo{scheme, ConstOrigin::Declared};
}

// Validates that the inferred body type is at least as general as the
// declared scheme: skolemize the declared variables as unforgeable base
// types, unify, then fold the skolems back into scheme variables.
void add_definition(TheoryEnv& env, const std::string& name, const TypeScheme& scheme,
                    const TermPtr& body_raw) {
  if (env.sig.find_const(name))
    throw theory_error("constant '" + name + "' is already declared");
  check_scheme_types_known(env, scheme.body, "definition '" + name + "'");

  Elaborated el = elaborate(body_raw, env);
  auto fv = free_vars(el.term);
  if (!fv.empty())
    throw theory_error("definition '" + name + "' has free variables (first: '" +
                       fv.begin()->first + "')");

  std::map<std::string, TypePtr> skolem;
  for (const auto& v : scheme.vars) skolem[v] = ty_base("#" + v);
  TypePtr want = apply_type_map(scheme.body, skolem);

  TypeSubst s;
  try {
    unify(el.type, want, s);
  } catch (const type_error& e) {
    throw type_error("definition '" + name + "': body type " + show_type(el.type) +
                     " does not match declared " + show_type(scheme.body));
  }

  // Resolve, then rename skolems back.
  struct Unskolem {
    static TypePtr run(const TypePtr& t) {
      switch (t->kind) {
        case Type::Kind::Base:
          if (!t->name.empty() && t->name[0] == '#') return ty_var(t->name.substr(1));
          return t;
        case Type::Kind::Var: return t;
        case Type::Kind::Arrow: return ty_arrow(run(t->dom), run(t->cod));
      }
      return t;
    }
  };
  std::map<std::string, TypePtr> resolve;
  std::vector<std::string> body_vars;
  TermPtr body = el.term;
  // Zonk all annotations through the final substitution.
  {
    std::function<TermPtr(const TermPtr&)> zonk = [&](const TermPtr& t) -> TermPtr {
      auto c = std::make_shared<Term>(*t);
      if (c->ty) c->ty = Unskolem::run(s.apply(c->ty));
      c->hint = nullptr;
      for (auto& a : c->type_args) a = Unskolem::run(s.apply(a));
      if (c->sub) c->sub = zonk(c->sub);
      if (c->arg) c->arg = zonk(c->arg);
      return c;
    };
    body = zonk(body);
  }
  // Every residual type variable must be a scheme variable; anything else
  // means the definition is ambiguous.
  {
    std::vector<std::string> vars;
    walk(body, [&](const TermPtr& t) {
      if (t->ty) collect_type_vars(t->ty, vars);
      for (const auto& a : t->type_args) collect_type_vars(a, vars);
    });
    for (const auto& v : vars)
      if (std::find(scheme.vars.begin(), scheme.vars.end(), v) == scheme.vars.end())
        throw type_error("definition '" + name +
                         "': body leaves type variable '" + v +
                         "' undetermined; add an ascription");
  }

  env.sig.term_consts[name] = ConstInfo{scheme, ConstOrigin::Defined};
  env.def_index[name] = env.defs.size();
  env.defs.push_back(Definition{name, scheme, body});
}

void add_axiom(TheoryEnv& env, const std::string& name, const TermPtr& body_raw) {
  for (const auto& [n, b] : env.axioms) {
    (void)b;
    if (n == name) throw theory_error("axiom '" + name + "' is already present");
  }
  Elaborated el = elaborate(body_raw, env);
  TypeSubst s;
  unify(el.type, ty_o(), s);
  TermPtr body = zonk_term(el.term, s);
  auto fv = free_vars(body);
  if (!fv.empty())
    throw theory_error("axiom '" + name + "' must be closed (free: '" +
                       fv.begin()->first + "')");
  std::vector<std::string> vars;
  walk(body, [&](const TermPtr& t) {
    if (t->ty) collect_type_vars(t->ty, vars);
    for (const auto& a : t->type_args) collect_type_vars(a, vars);
  });
  if (!vars.empty())
    throw type_error("axiom '" + name + "' has schematic type variable '" +
                     vars.front() + "'; instantiate it");
  env.axioms.emplace_back(name, body);
}

void add_infix(TheoryEnv& env, const std::string& symbol, const std::string& const_name,
               int prec) {
  if (symbol == "=" || symbol == "!=")
    throw theory_error("'" + symbol + "' is reserved for the kernel");
  for (char c : symbol)
    if (std::string("!$%&*+-/<=>?@^|~").find(c) == std::string::npos)
      throw theory_error("infix symbol '" + symbol + "' contains non-operator characters");
  if (env.notations.find_symbol(symbol))
    throw theory_error("infix symbol '" + symbol + "' is already in use");
  if (!env.sig.find_const(const_name))
    throw theory_error("infix declaration for unknown constant '" + const_name + "'");
  env.notations.infixes.push_back(InfixSpec{symbol, const_name, prec});
}

void add_binder(TheoryEnv& env, const std::string& const_name) {
  if (!env.sig.find_const(const_name))
    throw theory_error("binder declaration for unknown constant '" + const_name + "'");
  env.notations.binders.insert(const_name);
}

}  // namespace holq
