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

#include "holq/typecheck.hpp"

#include <sstream>

#include "holq/error.hpp"

namespace holq {

TypePtr TypeSubst::walk(const TypePtr& t) const {
  TypePtr cur = t;
  while (cur && cur->kind == Type::Kind::Var) {
    auto it = map.find(cur->name);
    if (it == map.end()) break;
    cur = it->second;
  }
  return cur;
}

TypePtr TypeSubst::apply(const TypePtr& t) const {
  TypePtr w = walk(t);
  if (!w) return w;
  if (w->kind == Type::Kind::Arrow) {
    TypePtr d = apply(w->dom), c = apply(w->cod);
    if (d.get() == w->dom.get() && c.get() == w->cod.get()) return w;
    return ty_arrow(d, c);
  }
  return w;
}

static bool occurs(const std::string& v, const TypePtr& t, const TypeSubst& s) {
  TypePtr w = s.walk(t);
  switch (w->kind) {
    case Type::Kind::Var: return w->name == v;
    case Type::Kind::Arrow: return occurs(v, w->dom, s) || occurs(v, w->cod, s);
    case Type::Kind::Base: return false;
  }
  return false;
}

void unify(const TypePtr& a0, const TypePtr& b0, TypeSubst& s) {
  TypePtr a = s.walk(a0), b = s.walk(b0);
  if (a->kind == Type::Kind::Var) {
    if (b->kind == Type::Kind::Var && b->name == a->name) return;
    if (occurs(a->name, b, s))
      throw type_error("occurs check: '" + a->name + " would recur in " +
                       show_type(s.apply(b)));
    s.map[a->name] = b;
    return;
  }
  if (b->kind == Type::Kind::Var) {
    unify(b, a, s);
    return;
  }
  if (a->kind == Type::Kind::Base && b->kind == Type::Kind::Base) {
    if (a->name != b->name)
      throw type_error("cannot unify " + show_type(a) + " with " + show_type(b));
    return;
  }
  if (a->kind == Type::Kind::Arrow && b->kind == Type::Kind::Arrow) {
    unify(a->dom, b->dom, s);
    unify(a->cod, b->cod, s);
    return;
  }
  throw type_error("cannot unify " + show_type(s.apply(a0)) + " with " +
                   show_type(s.apply(b0)));
}

TermPtr zonk_term(const TermPtr& t, const TypeSubst& s) {
  auto c = std::make_shared<Term>(*t);
  if (c->ty) c->ty = s.apply(c->ty);
  c->hint = nullptr;
  for (auto& a : c->type_args) a = s.apply(a);
  if (c->sub) c->sub = zonk_term(c->sub, s);
  if (c->arg) c->arg = zonk_term(c->arg, s);
  return c;
}

namespace {

struct Inferencer {
  const TheoryEnv& env;
  TypeSubst s;
  int counter = 0;
  std::set<std::string> used;  // type-variable names present in the input
  std::map<std::string, TypePtr> free_var_ty;
  std::vector<Occurrence>* occ;

  TypePtr fresh() {
    for (;;) {
      std::string n = "t" + std::to_string(counter++);
      if (!used.count(n)) return ty_var(n);
    }
  }

  void note_used(const TypePtr& t) {
    std::vector<std::string> vs;
    collect_type_vars(t, vs);
    used.insert(vs.begin(), vs.end());
  }

  void scan_used(const TermPtr& t) {
    walk(t, [&](const TermPtr& n) {
      if (n->ty) note_used(n->ty);
      if (n->hint) note_used(n->hint);
      for (const auto& a : n->type_args) note_used(a);
    });
  }

  TermPtr infer(const TermPtr& t, std::vector<std::pair<std::string, TypePtr>>& scope,
                TypePtr& ty_out) {
    switch (t->kind) {
      case Term::Kind::Var: {
        TypePtr base;
        bool bound = false;
        for (auto it = scope.rbegin(); it != scope.rend(); ++it)
          if (it->first == t->name) { base = it->second; bound = true; break; }
        if (!bound) {
          auto it = free_var_ty.find(t->name);
          if (it == free_var_ty.end())
            it = free_var_ty.emplace(t->name, t->ty ? t->ty : fresh()).first;
          base = it->second;
        }
        if (t->ty) unify(t->ty, base, s);
        if (t->hint) unify(base, t->hint, s);
        ty_out = base;
        return mk_var(t->name, base);
      }
      case Term::Kind::Const: {
        const ConstInfo* info = env.sig.find_const(t->name);
        if (!info) throw type_error("unknown constant '" + t->name + "'");
        std::vector<TypePtr> args;
        args.reserve(info->scheme.vars.size());
        for (std::size_t i = 0; i < info->scheme.vars.size(); ++i)
          args.push_back(fresh());
        TypePtr inst = instantiate(info->scheme, args);
        if (!t->type_args.empty()) {
          if (t->type_args.size() != args.size())
            throw type_error("constant '" + t->name + "' takes " +
                             std::to_string(args.size()) + " type arguments");
          for (std::size_t i = 0; i < args.size(); ++i)
            unify(args[i], t->type_args[i], s);
        }
        if (t->ty) unify(inst, t->ty, s);
        if (t->hint) unify(inst, t->hint, s);
        if (occ) occ->push_back(Occurrence{t->name, args, inst});
        ty_out = inst;
        return mk_const(t->name, args, inst);
      }
      case Term::Kind::Lam: {
        TypePtr bty = t->ty ? t->ty : fresh();
        scope.emplace_back(t->name, bty);
        TypePtr body_ty;
        TermPtr body = infer(t->sub, scope, body_ty);
        scope.pop_back();
        ty_out = ty_arrow(bty, body_ty);
        if (t->hint) unify(ty_out, t->hint, s);
        return mk_lam(t->name, bty, body);
      }
      case Term::Kind::App: {
        TypePtr fty, aty;
        TermPtr f = infer(t->sub, scope, fty);
        TermPtr a = infer(t->arg, scope, aty);
        TypePtr r = fresh();
        try {
          unify(fty, ty_arrow(aty, r), s);
        } catch (const type_error& e) {
          throw type_error(std::string(e.what()) + "\n  while applying " +
                           "a function of type " + show_type(s.apply(fty)) +
                           " to an argument of type " + show_type(s.apply(aty)));
        }
        ty_out = r;
        TermPtr ap = mk_app(f, a);
        if (t->hint) unify(ty_out, t->hint, s);
        return ap;
      }
    }
    throw type_error("corrupt term");
  }
};

}  // namespace

Elaborated elaborate(const TermPtr& t, const TheoryEnv& env,
                     std::vector<Occurrence>* occurrences) {
  Inferencer inf{env, {}, 0, {}, {}, occurrences};
  inf.scan_used(t);
  std::vector<std::pair<std::string, TypePtr>> scope;
  TypePtr ty;
  TermPtr out = inf.infer(t, scope, ty);
  out = zonk_term(out, inf.s);
  if (occurrences)
    for (auto& o : *occurrences) {
      for (auto& a : o.type_args) a = inf.s.apply(a);
      o.instance_type = inf.s.apply(o.instance_type);
    }
  return Elaborated{out, inf.s.apply(ty)};
}

TypePtr infer_type(const TermPtr& t, const TheoryEnv& env) {
  return elaborate(t, env).type;
}

std::string canonical_instance(const TypePtr& t) {
  std::vector<std::string> vars;
  collect_type_vars(t, vars);
  std::map<std::string, TypePtr> m;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    std::string nm;
    if (i < 26) nm = std::string(1, char('a' + i));
    else nm = "v" + std::to_string(i - 26);
    m[vars[i]] = ty_var(nm);
  }
  return show_type(apply_type_map(t, m));
}

std::size_t InstantiationDemo::distinct(const std::string& const_name) const {
  auto it = instances.find(const_name);
  return it == instances.end() ? 0 : it->second.size();
}

std::string InstantiationDemo::render() const {
  std::ostringstream os;
  os << "constant occurrences and their instantiations:\n";
  for (const auto& e : occurrences)
    os << "  " << e.const_name << " : " << e.instance << "\n";
  for (const auto& [name, insts] : instances)
    if (insts.size() > 1)
      os << name << " occurs at " << insts.size() << " distinct instantiations\n";
  return os.str();
}

InstantiationDemo check_distinct_instantiation_demo(const TermPtr& t,
                                                    const TheoryEnv& env) {
  std::vector<Occurrence> occ;
  elaborate(t, env, &occ);
  InstantiationDemo demo;
  for (const auto& o : occ) {
    std::string inst = canonical_instance(o.instance_type);
    demo.occurrences.push_back({o.const_name, inst});
    demo.instances[o.const_name].insert(inst);
  }
  return demo;
}

}  // namespace holq
