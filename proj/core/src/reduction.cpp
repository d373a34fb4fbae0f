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

#include "holq/reduction.hpp"

#include "holq/error.hpp"
#include "holq/typecheck.hpp"

namespace holq {

namespace {

struct Reducer {
  std::uint64_t fuel;

  void tick() {
    if (fuel == 0)
      throw reduction_error(
          "beta reduction fuel exhausted (ill-typed or divergent input?)");
    --fuel;
  }

  TermPtr whnf(TermPtr t) {
    for (;;) {
      if (t->kind != Term::Kind::App) return t;
      TermPtr f = whnf(t->sub);
      if (f->kind == Term::Kind::Lam) {
        tick();
        t = substitute(f->sub, f->name, t->arg);
        continue;
      }
      return f.get() == t->sub.get() ? t : mk_app(f, t->arg);
    }
  }

  TermPtr nf(const TermPtr& t0) {
    TermPtr t = whnf(t0);
    switch (t->kind) {
      case Term::Kind::Lam: {
        TermPtr body = nf(t->sub);
        return body.get() == t->sub.get() ? t : mk_lam(t->name, t->ty, body);
      }
      case Term::Kind::App: {
        // The head is rigid (Var/Const) after whnf; normalizing the parts
        // cannot create a new top-level redex.
        TermPtr f = nf(t->sub);
        TermPtr a = nf(t->arg);
        if (f.get() == t->sub.get() && a.get() == t->arg.get()) return t;
        return mk_app(f, a);
      }
      default: return t;
    }
  }

  TermPtr nf_applicative(const TermPtr& t) {
    switch (t->kind) {
      case Term::Kind::Lam: {
        TermPtr body = nf_applicative(t->sub);
        return body.get() == t->sub.get() ? t : mk_lam(t->name, t->ty, body);
      }
      case Term::Kind::App: {
        TermPtr f = nf_applicative(t->sub);
        TermPtr a = nf_applicative(t->arg);
        if (f->kind == Term::Kind::Lam) {
          tick();
          return nf_applicative(substitute(f->sub, f->name, a));
        }
        if (f.get() == t->sub.get() && a.get() == t->arg.get()) return t;
        return mk_app(f, a);
      }
      default: return t;
    }
  }
};

// One post-order pass: children are contracted first, so a binder whose
// body just collapsed to `M x` is handled on the way out, including
// cascades like \x. (\y. f x y).
TermPtr eta_contract(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Lam: {
      TermPtr body = eta_contract(t->sub);
      if (body->kind == Term::Kind::App && body->arg->kind == Term::Kind::Var &&
          body->arg->name == t->name) {
        auto fv = free_vars(body->sub);
        if (!fv.count(t->name)) return body->sub;
      }
      return body.get() == t->sub.get() ? t : mk_lam(t->name, t->ty, body);
    }
    case Term::Kind::App: {
      TermPtr f = eta_contract(t->sub);
      TermPtr a = eta_contract(t->arg);
      if (f.get() == t->sub.get() && a.get() == t->arg.get()) return t;
      return mk_app(f, a);
    }
    default: return t;
  }
}

}  // namespace

TermPtr beta_normalize(const TermPtr& t, NormMode mode, std::uint64_t fuel) {
  Reducer r{fuel};
  TermPtr n = r.nf(t);
  if (mode == NormMode::BetaEta) n = eta_contract(n);
  return n;
}

TermPtr beta_normalize_applicative(const TermPtr& t, std::uint64_t fuel) {
  Reducer r{fuel};
  return r.nf_applicative(t);
}

static TermPtr unfold_once(const TermPtr& t, const TheoryEnv& env,
                           const std::set<std::string>* names, bool& changed) {
  switch (t->kind) {
    case Term::Kind::Const: {
      if (names && !names->count(t->name)) return t;
      const Definition* def = env.find_def(t->name);
      if (!def) return t;
      if (t->type_args.size() != def->scheme.vars.size()) {
        if (def->scheme.vars.empty()) {
          changed = true;
          return def->body;
        }
        throw theory_error("unfold of '" + t->name +
                           "' requires an elaborated term (missing type arguments)");
      }
      std::map<std::string, TypePtr> m;
      for (std::size_t i = 0; i < def->scheme.vars.size(); ++i)
        m[def->scheme.vars[i]] = t->type_args[i];
      changed = true;
      return apply_type_map_term(def->body, m);
    }
    case Term::Kind::Var: return t;
    case Term::Kind::Lam: {
      TermPtr body = unfold_once(t->sub, env, names, changed);
      return body.get() == t->sub.get() ? t : mk_lam(t->name, t->ty, body);
    }
    case Term::Kind::App: {
      TermPtr f = unfold_once(t->sub, env, names, changed);
      TermPtr a = unfold_once(t->arg, env, names, changed);
      if (f.get() == t->sub.get() && a.get() == t->arg.get()) return t;
      return mk_app(f, a);
    }
  }
  return t;
}

TermPtr unfold(const TermPtr& t, const TheoryEnv& env) {
  TermPtr cur = t;
  for (;;) {
    bool changed = false;
    cur = unfold_once(cur, env, nullptr, changed);
    if (!changed) return cur;
  }
}

TermPtr unfold(const TermPtr& t, const TheoryEnv& env,
               const std::set<std::string>& names) {
  for (const auto& n : names)
    if (!env.find_def(n))
      throw theory_error("unfold: '" + n + "' is not a defined constant");
  TermPtr cur = t;
  for (;;) {
    bool changed = false;
    cur = unfold_once(cur, env, &names, changed);
    if (!changed) return cur;
  }
}

TermPtr normalize(const TermPtr& t, const TheoryEnv& env, NormMode mode,
                  std::uint64_t fuel) {
  Elaborated el = elaborate(t, env);
  return beta_normalize(unfold(el.term, env), mode, fuel);
}

bool betaeta_equal(const TermPtr& a, const TermPtr& b, const TheoryEnv& env) {
  Elaborated ea = elaborate(a, env);
  Elaborated eb = elaborate(b, env);
  TypeSubst s;
  try {
    unify(ea.type, eb.type, s);
  } catch (const type_error&) {
    throw type_error("type mismatch: " + show_type(ea.type) + " vs " +
                     show_type(eb.type));
  }
  TermPtr na = beta_normalize(unfold(ea.term, env), NormMode::BetaEta);
  TermPtr nb = beta_normalize(unfold(eb.term, env), NormMode::BetaEta);
  return alpha_equal_mod_tyvars(na, nb);
}

}  // namespace holq
