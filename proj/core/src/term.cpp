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

#include "holq/term.hpp"

#include "holq/error.hpp"

namespace holq {

TermPtr mk_const(std::string name, std::vector<TypePtr> type_args, TypePtr ty) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Const;
  t->name = std::move(name);
  t->type_args = std::move(type_args);
  t->ty = std::move(ty);
  return t;
}

TermPtr mk_var(std::string name, TypePtr ty) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Var;
  t->name = std::move(name);
  t->ty = std::move(ty);
  return t;
}

TermPtr mk_lam(std::string binder, TypePtr binder_ty, TermPtr body) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Lam;
  t->name = std::move(binder);
  t->ty = std::move(binder_ty);
  t->sub = std::move(body);
  return t;
}

TermPtr mk_app(TermPtr f, TermPtr a) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::App;
  t->sub = std::move(f);
  t->arg = std::move(a);
  return t;
}

TermPtr mk_app(TermPtr f, TermPtr a, TermPtr b) {
  return mk_app(mk_app(std::move(f), std::move(a)), std::move(b));
}

TermPtr mk_ascribe(TermPtr t, TypePtr ty) {
  auto c = std::make_shared<Term>(*t);
  c->hint = std::move(ty);
  return c;
}

TypePtr node_type(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Const:
    case Term::Kind::Var:
      if (!t->ty) throw type_error("term lacks type annotations; elaborate first");
      return t->ty;
    case Term::Kind::Lam: {
      if (!t->ty) throw type_error("binder lacks type annotation");
      return ty_arrow(t->ty, node_type(t->sub));
    }
    case Term::Kind::App: {
      TypePtr f = node_type(t->sub);
      if (f->kind != Type::Kind::Arrow)
        throw type_error("application of non-function while reading types");
      return f->cod;
    }
  }
  throw type_error("corrupt term");
}

static void free_vars_rec(const TermPtr& t, std::vector<std::string>& bound,
                          std::map<std::string, TypePtr>& out) {
  switch (t->kind) {
    case Term::Kind::Const: return;
    case Term::Kind::Var: {
      for (auto it = bound.rbegin(); it != bound.rend(); ++it)
        if (*it == t->name) return;
      auto it = out.find(t->name);
      if (it == out.end() || !it->second) out[t->name] = t->ty;
      return;
    }
    case Term::Kind::Lam:
      bound.push_back(t->name);
      free_vars_rec(t->sub, bound, out);
      bound.pop_back();
      return;
    case Term::Kind::App:
      free_vars_rec(t->sub, bound, out);
      free_vars_rec(t->arg, bound, out);
      return;
  }
}

std::map<std::string, TypePtr> free_vars(const TermPtr& t) {
  std::map<std::string, TypePtr> out;
  std::vector<std::string> bound;
  free_vars_rec(t, bound, out);
  return out;
}

bool is_closed(const TermPtr& t) { return free_vars(t).empty(); }

namespace {

// Optional global bijection on type-variable names; null means strict
// comparison.
struct TyVarBij {
  std::map<std::string, std::string> fwd, bwd;
};

bool type_eq_mod(const TypePtr& a, const TypePtr& b, TyVarBij* bij) {
  if (!bij) return type_equal(a, b);
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Type::Kind::Base: return a->name == b->name;
    case Type::Kind::Var: {
      auto f = bij->fwd.find(a->name);
      auto g = bij->bwd.find(b->name);
      if (f == bij->fwd.end() && g == bij->bwd.end()) {
        bij->fwd[a->name] = b->name;
        bij->bwd[b->name] = a->name;
        return true;
      }
      return f != bij->fwd.end() && g != bij->bwd.end() &&
             f->second == b->name && g->second == a->name;
    }
    case Type::Kind::Arrow:
      return type_eq_mod(a->dom, b->dom, bij) && type_eq_mod(a->cod, b->cod, bij);
  }
  return false;
}

// Types at occurrences compare leniently (only when both are present) so
// that freshly parsed and elaborated terms can be related; binder
// annotations and present constant instantiations compare strictly.
bool lenient_type_eq(const TypePtr& a, const TypePtr& b, TyVarBij* bij) {
  if (!a || !b) return true;
  return type_eq_mod(a, b, bij);
}

bool alpha_rec(const TermPtr& a, const TermPtr& b,
               std::vector<std::pair<std::string, std::string>>& bound,
               TyVarBij* bij) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Const: {
      if (a->name != b->name) return false;
      if (!a->type_args.empty() && !b->type_args.empty()) {
        if (a->type_args.size() != b->type_args.size()) return false;
        for (std::size_t i = 0; i < a->type_args.size(); ++i)
          if (!type_eq_mod(a->type_args[i], b->type_args[i], bij)) return false;
      }
      return true;
    }
    case Term::Kind::Var: {
      for (auto it = bound.rbegin(); it != bound.rend(); ++it) {
        bool la = it->first == a->name, lb = it->second == b->name;
        if (la || lb) return la && lb;
      }
      return a->name == b->name && lenient_type_eq(a->ty, b->ty, bij);
    }
    case Term::Kind::Lam: {
      if (!lenient_type_eq(a->ty, b->ty, bij)) return false;
      bound.emplace_back(a->name, b->name);
      bool r = alpha_rec(a->sub, b->sub, bound, bij);
      bound.pop_back();
      return r;
    }
    case Term::Kind::App:
      return alpha_rec(a->sub, b->sub, bound, bij) &&
             alpha_rec(a->arg, b->arg, bound, bij);
  }
  return false;
}

}  // namespace

bool alpha_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  std::vector<std::pair<std::string, std::string>> bound;
  return alpha_rec(a, b, bound, nullptr);
}

bool alpha_equal_mod_tyvars(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  std::vector<std::pair<std::string, std::string>> bound;
  TyVarBij bij;
  return alpha_rec(a, b, bound, &bij);
}

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  std::string n = base;
  while (taken.count(n)) n += '\'';
  return n;
}

static void collect_names(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::Const: out.insert(t->name); return;
    case Term::Kind::Var: out.insert(t->name); return;
    case Term::Kind::Lam:
      out.insert(t->name);
      collect_names(t->sub, out);
      return;
    case Term::Kind::App:
      collect_names(t->sub, out);
      collect_names(t->arg, out);
      return;
  }
}

static TermPtr subst_rec(const TermPtr& t, const std::string& x, const TermPtr& u,
                         const std::set<std::string>& fv_u) {
  switch (t->kind) {
    case Term::Kind::Const: return t;
    case Term::Kind::Var: return t->name == x ? u : t;
    case Term::Kind::Lam: {
      if (t->name == x) return t;
      if (fv_u.count(t->name)) {
        // The binder would capture a free variable of u: rename it.
        std::set<std::string> taken = fv_u;
        collect_names(t->sub, taken);
        taken.insert(x);
        std::string y = fresh_name(t->name, taken);
        TermPtr body = subst_rec(t->sub, t->name, mk_var(y, t->ty), {});
        TermPtr body2 = subst_rec(body, x, u, fv_u);
        return mk_lam(y, t->ty, body2);
      }
      TermPtr body = subst_rec(t->sub, x, u, fv_u);
      if (body.get() == t->sub.get()) return t;
      return mk_lam(t->name, t->ty, body);
    }
    case Term::Kind::App: {
      TermPtr f = subst_rec(t->sub, x, u, fv_u);
      TermPtr a = subst_rec(t->arg, x, u, fv_u);
      if (f.get() == t->sub.get() && a.get() == t->arg.get()) return t;
      return mk_app(f, a);
    }
  }
  return t;
}

TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& u,
                   const TypePtr& x_ty) {
  if (x_ty && u->ty && !type_equal(x_ty, u->ty))
    throw type_error("substitute: " + x + " : " + show_type(x_ty) +
                     " does not match replacement of type " + show_type(u->ty));
  std::set<std::string> fv_u;
  for (auto& [n, ty] : free_vars(u)) { (void)ty; fv_u.insert(n); }
  return subst_rec(t, x, u, fv_u);
}

TermPtr apply_type_map_term(const TermPtr& t, const std::map<std::string, TypePtr>& m) {
  if (m.empty()) return t;
  auto c = std::make_shared<Term>(*t);
  if (c->ty) c->ty = apply_type_map(c->ty, m);
  if (c->hint) c->hint = apply_type_map(c->hint, m);
  for (auto& a : c->type_args) a = apply_type_map(a, m);
  if (c->sub) c->sub = apply_type_map_term(c->sub, m);
  if (c->arg) c->arg = apply_type_map_term(c->arg, m);
  return c;
}

void walk(const TermPtr& t, const std::function<void(const TermPtr&)>& f) {
  f(t);
  if (t->sub) walk(t->sub, f);
  if (t->arg) walk(t->arg, f);
}

}  // namespace holq
