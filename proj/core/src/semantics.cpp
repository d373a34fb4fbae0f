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

#include "holq/semantics.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "holq/error.hpp"
#include "holq/reduction.hpp"
#include "holq/typecheck.hpp"

namespace holq {

namespace {

// a * b, throwing cap_error for ty when the product leaves [0, limit].
std::uint64_t mul_capped(std::uint64_t a, std::uint64_t b, std::uint64_t limit,
                         const TypePtr& ty) {
  std::uint64_t r;
  bool overflow = __builtin_mul_overflow(a, b, &r);
  if (overflow || r > limit)
    throw cap_error(show_type(ty), overflow ? UINT64_MAX / 2 : r, limit);
  return r;
}

}  // namespace

std::uint64_t Frame::size_of(const TypePtr& ty) const {
  switch (ty->kind) {
    case Type::Kind::Base: {
      if (ty->name == "o") return o_size;
      auto it = bases.find(ty->name);
      if (it == bases.end())
        throw eval_error("no size assigned to base type '" + ty->name + "'");
      return it->second;
    }
    case Type::Kind::Var:
      throw eval_error("schematic type " + show_type(ty) +
                       " has no finite domain");
    case Type::Kind::Arrow: {
      std::uint64_t sa = size_of(ty->dom);
      std::uint64_t sb = size_of(ty->cod);
      if (sa == 0) return 1;
      if (sb == 0) return 0;
      std::uint64_t r = 1;
      for (std::uint64_t i = 0; i < sa; ++i) r = mul_capped(r, sb, cap, ty);
      return r;
    }
  }
  throw eval_error("malformed type");
}

std::vector<Elem> enumerate_domain(const TypePtr& ty, const Frame& f) {
  std::uint64_t n = f.size_of(ty);
  std::vector<Elem> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(Elem{ty, i});
  return out;
}

Elem apply_elem(const Frame& f, const Elem& fn, const Elem& a) {
  if (fn.ty->kind != Type::Kind::Arrow)
    throw eval_error("applied a non-function element of type " +
                     show_type(fn.ty));
  f.size_of(fn.ty);  // enforce the cap before doing index arithmetic
  std::uint64_t sb = f.size_of(fn.ty->cod);
  std::uint64_t div = 1;
  for (std::uint64_t i = 0; i < a.idx; ++i) div *= sb;
  return Elem{fn.ty->cod, (fn.idx / div) % sb};
}

Elem elem_from_fn(const Frame& f, const TypePtr& dom, const TypePtr& cod,
                  const std::function<std::uint64_t(std::uint64_t)>& fn) {
  TypePtr ty = ty_arrow(dom, cod);
  f.size_of(ty);  // cap check
  std::uint64_t sa = f.size_of(dom);
  std::uint64_t idx = 0, w = 1, sb = f.size_of(cod);
  for (std::uint64_t j = 0; j < sa; ++j) {
    idx += fn(j) * w;
    w *= sb;
  }
  return Elem{ty, idx};
}

// ---------------------------------------------------------------------------
// Denotation

namespace {

// Evaluates normalized terms against one fixed model.  Scope is a stack of
// (name, value) bindings, innermost last.  Results are memoized per
// (node, values of the node's free variables), which keeps equalities such
// as (\g. g s t) = (\g. g true true) from re-evaluating s and t once per
// enumerated g; the memo stays sound across valuations of the same model
// because every free variable a node depends on is part of its key.
struct Evaluator {
  const Model& m;
  std::vector<std::pair<std::string, Elem>> scope;

  explicit Evaluator(const Model& model) : m(model) {}

  bool bvalued() const { return m.alg != nullptr; }
  std::uint64_t o_top() const { return bvalued() ? m.alg->top() : 1; }

  // Domain sizes and node types, cached by structural identity.
  std::unordered_map<const Type*, std::uint64_t> size_cache;
  std::unordered_map<const Term*, TypePtr> type_cache;

  std::uint64_t sz(const TypePtr& ty) {
    auto it = size_cache.find(ty.get());
    if (it != size_cache.end()) return it->second;
    std::uint64_t n = m.frame.size_of(ty);
    size_cache.emplace(ty.get(), n);
    return n;
  }

  const TypePtr& ty_of(const TermPtr& t) {
    auto it = type_cache.find(t.get());
    if (it != type_cache.end()) return it->second;
    return type_cache.emplace(t.get(), node_type(t)).first->second;
  }

  Elem apply_fast(const Elem& fn, const Elem& a) {
    if (fn.ty->kind != Type::Kind::Arrow)
      throw eval_error("applied a non-function element of type " +
                       show_type(fn.ty));
    sz(fn.ty);  // enforce the cap before doing index arithmetic
    std::uint64_t sb = sz(fn.ty->cod);
    std::uint64_t div = 1;
    for (std::uint64_t i = 0; i < a.idx; ++i) div *= sb;
    return Elem{fn.ty->cod, (fn.idx / div) % sb};
  }

  // Sorted free-variable names per node, computed once.
  std::unordered_map<const Term*, std::vector<std::string>> fv_cache;

  const std::vector<std::string>& fvs_of(const TermPtr& t) {
    auto it = fv_cache.find(t.get());
    if (it != fv_cache.end()) return it->second;
    std::vector<std::string> out;
    switch (t->kind) {
      case Term::Kind::Var:
        out.push_back(t->name);
        break;
      case Term::Kind::Const:
        break;
      case Term::Kind::Lam: {
        for (const auto& n : fvs_of(t->sub))
          if (n != t->name) out.push_back(n);
        break;
      }
      case Term::Kind::App: {
        const auto& a = fvs_of(t->sub);
        const auto& b = fvs_of(t->arg);
        std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                       std::back_inserter(out));
        break;
      }
    }
    return fv_cache.emplace(t.get(), std::move(out)).first->second;
  }

  struct MemoKey {
    const Term* node;
    std::array<std::uint64_t, 8> vals;
    std::uint8_t n;
    bool operator==(const MemoKey& o) const {
      if (node != o.node || n != o.n) return false;
      for (unsigned i = 0; i < n; ++i)
        if (vals[i] != o.vals[i]) return false;
      return true;
    }
  };
  struct MemoHash {
    std::size_t operator()(const MemoKey& k) const {
      std::size_t h = std::hash<const void*>()(k.node);
      for (unsigned i = 0; i < k.n; ++i)
        h = (h ^ k.vals[i]) * 1099511628211ull;
      return h;
    }
  };
  std::unordered_map<MemoKey, Elem, MemoHash> memo;

  const Elem* lookup(const std::string& name) const {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }

  // Builds the memo key for t from the current scope; fails when t has more
  // free variables than the key holds or one of them is unbound.
  bool make_key(const TermPtr& t, MemoKey& key) {
    const auto& fvs = fvs_of(t);
    if (fvs.size() > key.vals.size()) return false;
    key.node = t.get();
    key.n = static_cast<std::uint8_t>(fvs.size());
    for (unsigned i = 0; i < key.n; ++i) {
      const Elem* e = lookup(fvs[i]);
      if (!e) return false;
      key.vals[i] = e->idx;
    }
    return true;
  }

  // Equality between two elements of the same type as an o-element.  In
  // standard mode this is index equality; in B-valued mode it is the
  // graded equality: iff at o, the q table at the distinguished base,
  // iterated meets through arrows.
  std::uint64_t q_value(const Elem& a, const Elem& b) {
    if (!bvalued()) return a.idx == b.idx ? 1 : 0;
    const TypePtr& ty = a.ty;
    switch (ty->kind) {
      case Type::Kind::Base:
        if (ty->name == "o") return m.alg->iff(a.idx, b.idx);
        if (ty->name == m.q_base) {
          if (m.q == nullptr || a.idx >= m.q->n() || b.idx >= m.q->n())
            throw eval_error("no q table covering base '" + ty->name + "'");
          return m.q->at(a.idx, b.idx);
        }
        return a.idx == b.idx ? m.alg->top() : BoolAlg::bottom;
      case Type::Kind::Var:
        throw eval_error("schematic type in equality");
      case Type::Kind::Arrow: {
        std::uint64_t sa = sz(ty->dom);
        std::uint64_t acc = m.alg->top();
        for (std::uint64_t j = 0; j < sa; ++j) {
          Elem x{ty->dom, j};
          acc = m.alg->meet(acc, q_value(apply_fast(a, x), apply_fast(b, x)));
          if (acc == BoolAlg::bottom) break;
        }
        return acc;
      }
    }
    throw eval_error("malformed type in equality");
  }

  // The full function element for a bare Q/D occurrence at instance alpha.
  Elem synth_eq(const TypePtr& alpha, bool dual) {
    TypePtr inner = ty_arrow(alpha, ty_o());
    return elem_from_fn(m.frame, alpha, inner, [&](std::uint64_t i) {
      Elem x{alpha, i};
      return elem_from_fn(m.frame, alpha, ty_o(), [&](std::uint64_t j) {
               Elem y{alpha, j};
               std::uint64_t v = q_value(x, y);
               return dual ? (bvalued() ? m.alg->cmpl(v) : 1 - v) : v;
             })
          .idx;
    });
  }

  // First element of the set denoted by pred (an element of b -> o), or
  // the model's default for b.  Membership means the top truth value.
  Elem describe(const std::string& base, const Elem& pred) {
    TypePtr bty = ty_base(base);
    std::uint64_t n = m.frame.size_of(bty);
    for (std::uint64_t y = 0; y < n; ++y)
      if (apply_fast(pred, Elem{bty, y}).idx == o_top())
        return Elem{bty, y};
    auto it = m.iota_default.find(base);
    return Elem{bty, it == m.iota_default.end() ? 0 : it->second};
  }

  const TypePtr& const_instance(const TermPtr& c) {
    if (!c->ty)
      throw eval_error("constant '" + c->name +
                       "' lacks a type annotation (elaborate first)");
    return c->ty;
  }

  Elem eval_const(const TermPtr& t) {
    const TypePtr& inst = const_instance(t);
    if (t->name == "Q" || t->name == "D") {
      if (t->type_args.size() != 1)
        throw eval_error("'" + t->name + "' lacks its type instantiation");
      return synth_eq(t->type_args[0], t->name == "D");
    }
    if (m.sig) {
      auto dit = m.sig->descr_consts.find(t->name);
      if (dit != m.sig->descr_consts.end()) {
        const std::string base = dit->second;
        TypePtr pred_ty = ty_arrow(ty_base(base), ty_o());
        return elem_from_fn(m.frame, pred_ty, ty_base(base),
                            [&](std::uint64_t p) {
                              return describe(base, Elem{pred_ty, p}).idx;
                            });
      }
    }
    auto cit = m.consts.find(t->name);
    if (cit != m.consts.end()) {
      auto iit = cit->second.find(show_type(inst));
      if (iit != cit->second.end()) return iit->second;
    }
    throw eval_error("constant '" + t->name + "' : " + show_type(inst) +
                     " has no interpretation (unfold definitions first)");
  }

  Elem eval_under(const TermPtr& lam, const Elem& x) {
    scope.emplace_back(lam->name, x);
    Elem r = eval(lam->sub);
    scope.pop_back();
    return r;
  }

  // Equality of two terms of type alpha.  When alpha is a function type and
  // an operand is a lambda, compare pointwise instead of materializing the
  // table: this short-circuits on the first differing argument, which is
  // what makes quantifiers (P = \x. true) cheap to refute.
  std::uint64_t q_pointwise(const TypePtr& alpha, const TermPtr& lt,
                            const TermPtr& rt) {
    if (alpha->kind != Type::Kind::Arrow ||
        (lt->kind != Term::Kind::Lam && rt->kind != Term::Kind::Lam))
      return q_value(eval(lt), eval(rt));
    std::optional<Elem> le, re;
    if (lt->kind != Term::Kind::Lam) le = eval(lt);
    if (rt->kind != Term::Kind::Lam) re = eval(rt);
    std::uint64_t sa = sz(alpha->dom);
    std::uint64_t acc = o_top();
    for (std::uint64_t j = 0; j < sa; ++j) {
      Elem x{alpha->dom, j};
      Elem a = le ? apply_fast(*le, x) : eval_under(lt, x);
      Elem b = re ? apply_fast(*re, x) : eval_under(rt, x);
      std::uint64_t v = q_value(a, b);
      acc = bvalued() ? m.alg->meet(acc, v) : (v == o_top() ? acc : 0);
      if (acc == BoolAlg::bottom) break;
    }
    return acc;
  }

  Elem eval(const TermPtr& t) {
    if (t->kind == Term::Kind::Var) {
      const Elem* e = lookup(t->name);
      if (!e) throw eval_error("unbound variable '" + t->name + "'");
      return *e;
    }
    MemoKey key;
    bool keyed = make_key(t, key);
    if (keyed) {
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
    }
    Elem r = eval_raw(t);
    if (keyed) {
      if (memo.size() > (1u << 21)) memo.clear();
      memo.emplace(key, r);
    }
    return r;
  }

  Elem eval_raw(const TermPtr& t) {
    switch (t->kind) {
      case Term::Kind::Var:
        break;  // handled in eval
      case Term::Kind::Const:
        return eval_const(t);
      case Term::Kind::Lam: {
        const TypePtr& lam_ty = ty_of(t);
        const TypePtr& dom = lam_ty->dom;
        sz(lam_ty);  // cap check
        std::uint64_t sa = sz(dom), sb = sz(lam_ty->cod);
        std::uint64_t idx = 0, w = 1;
        for (std::uint64_t j = 0; j < sa; ++j) {
          idx += eval_under(t, Elem{dom, j}).idx * w;
          w *= sb;
        }
        return Elem{lam_ty, idx};
      }
      case Term::Kind::App: {
        // Fully applied equality and description operators evaluate
        // directly, so Q at a large instance never materializes its table.
        std::vector<const TermPtr*> args;
        const TermPtr* cur = &t;
        while ((*cur)->kind == Term::Kind::App) {
          args.push_back(&(*cur)->arg);
          cur = &(*cur)->sub;
        }
        std::reverse(args.begin(), args.end());
        const Term* head = cur->get();
        if (head->kind == Term::Kind::Const && args.size() == 2 &&
            (head->name == "Q" || head->name == "D")) {
          if (head->type_args.size() != 1)
            throw eval_error("'" + head->name +
                             "' lacks its type instantiation");
          std::uint64_t v =
              q_pointwise(head->type_args[0], *args[0], *args[1]);
          if (head->name == "D") v = bvalued() ? m.alg->cmpl(v) : 1 - v;
          return Elem{ty_o(), v};
        }
        if (head->kind == Term::Kind::Const && args.size() == 1 && m.sig) {
          auto dit = m.sig->descr_consts.find(head->name);
          if (dit != m.sig->descr_consts.end())
            return describe(dit->second, eval(*args[0]));
        }
        Elem f = eval(t->sub);
        Elem a = eval(t->arg);
        return apply_fast(f, a);
      }
    }
    throw eval_error("malformed term");
  }
};

}  // namespace

Elem denote(const TermPtr& t, const Model& m, const Valuation& v) {
  Evaluator ev(m);
  ev.scope.assign(v.begin(), v.end());
  return ev.eval(t);
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

void render_elem_rec(std::ostream& os, const Elem& e, const Frame& f,
                     bool nested) {
  if (e.ty->kind == Type::Kind::Base) {
    if (e.ty->name == "o") {
      if (f.o_size == 2) {
        os << (e.idx ? "T" : "F");
      } else {
        // powerset algebra element: set of atoms
        os << "{";
        bool first = true;
        for (unsigned i = 0; (1ull << i) < f.o_size; ++i)
          if (e.idx & (1ull << i)) {
            if (!first) os << ",";
            os << "a" << i;
            first = false;
          }
        os << "}";
      }
    } else {
      os << "e" << e.idx;
    }
    return;
  }
  if (nested) {  // keep tuples readable: a nested function is its index
    os << "#" << e.idx;
    return;
  }
  // Uncurry fully and print the flat table.
  std::vector<TypePtr> doms;
  TypePtr ty = e.ty;
  while (ty->kind == Type::Kind::Arrow) {
    doms.push_back(ty->dom);
    ty = ty->cod;
  }
  std::vector<std::uint64_t> sizes;
  std::uint64_t total = 1;
  for (const auto& d : doms) {
    sizes.push_back(f.size_of(d));
    total *= sizes.back();
  }
  if (total > 64) {
    os << "#" << e.idx << " : " << show_type(e.ty);
    return;
  }
  os << "{";
  std::vector<std::uint64_t> tuple(doms.size(), 0);
  bool first_row = true;
  for (std::uint64_t row = 0; row < total; ++row) {
    if (!first_row) os << ", ";
    first_row = false;
    Elem cur = e;
    if (doms.size() > 1) os << "(";
    for (std::size_t k = 0; k < doms.size(); ++k) {
      if (k) os << ",";
      Elem arg{doms[k], tuple[k]};
      render_elem_rec(os, arg, f, true);
      cur = apply_elem(f, cur, arg);
    }
    if (doms.size() > 1) os << ")";
    os << "->";
    render_elem_rec(os, cur, f, true);
    // advance the tuple, last coordinate fastest
    for (std::size_t k = doms.size(); k-- > 0;) {
      if (++tuple[k] < sizes[k]) break;
      tuple[k] = 0;
    }
  }
  os << "}";
}

}  // namespace

std::string render_elem(const Elem& e, const Frame& f) {
  std::ostringstream os;
  render_elem_rec(os, e, f, false);
  return os.str();
}

std::string render_countermodel(const Countermodel& cm,
                                const std::string& indent) {
  std::ostringstream os;
  os << indent << "sizes:";
  if (cm.sizes.empty()) os << " (none)";
  bool first = true;
  for (const auto& [b, n] : cm.sizes) {
    os << (first ? " " : ", ") << b << "=" << n;
    first = false;
  }
  os << "\n";
  for (const auto& [b, n] : cm.sizes) {
    os << indent << "base " << b << " = {";
    for (std::uint64_t i = 0; i < n; ++i) os << (i ? "," : "") << "e" << i;
    os << "}\n";
  }
  for (const auto& [name, insts] : cm.model.consts)
    for (const auto& [inst, el] : insts)
      os << indent << "const " << name << " : " << inst << " = "
         << render_elem(el, cm.model.frame) << "\n";
  for (const auto& [name, el] : cm.val)
    os << indent << "var " << name << " : " << show_type(el.ty) << " = "
       << render_elem(el, cm.model.frame) << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Validity search

namespace {

// Declared-constant occurrences needing an interpretation, keyed and
// ordered by (name, instance).
struct ConstSlot {
  std::string name;
  TypePtr instance;
  std::string instance_str;
};

void collect_slots(const TermPtr& t, const Signature& sig,
                   std::vector<ConstSlot>& slots) {
  walk(t, [&](const TermPtr& s) {
    if (s->kind != Term::Kind::Const) return;
    if (s->name == "Q" || s->name == "D") return;
    if (sig.descr_consts.count(s->name)) return;
    const ConstInfo* info = sig.find_const(s->name);
    if (info && info->origin == ConstOrigin::Defined) return;  // unfolded
    if (!s->ty) throw eval_error("constant '" + s->name + "' not elaborated");
    if (!is_concrete(s->ty))
      throw eval_error("constant '" + s->name +
                       "' occurs at the schematic type " + show_type(s->ty) +
                       "; add a type ascription to pin it down");
    std::string str = show_type(s->ty);
    for (const auto& sl : slots)
      if (sl.name == s->name && sl.instance_str == str) return;
    slots.push_back(ConstSlot{s->name, s->ty, str});
  });
}

}  // namespace

ValidityResult check_valid(const TermPtr& goal, const TheoryEnv& env,
                           const std::vector<SizeMap>& sizes,
                           std::uint64_t cap) {
  // Elaborate at o, then reduce to the Q/D(/description) core.
  Elaborated e = elaborate(goal, env);
  {
    TypeSubst s;
    unify(e.type, ty_o(), s);
    e.term = zonk_term(e.term, s);
  }
  TermPtr core = beta_normalize(unfold(e.term, env));

  std::map<std::string, TypePtr> fvs = free_vars(core);
  for (const auto& [name, ty] : fvs) {
    if (!ty || !is_concrete(ty))
      throw eval_error("free variable '" + name +
                       "' has a schematic type; annotate it");
  }

  std::vector<TermPtr> axiom_cores;
  for (const auto& [name, body] : env.axioms)
    axiom_cores.push_back(beta_normalize(unfold(body, env)));

  std::vector<ConstSlot> slots;
  collect_slots(core, env.sig, slots);
  for (const auto& ax : axiom_cores) collect_slots(ax, env.sig, slots);
  std::sort(slots.begin(), slots.end(), [](const ConstSlot& a, const ConstSlot& b) {
    return a.name != b.name ? a.name < b.name : a.instance_str < b.instance_str;
  });

  ValidityResult result;
  for (const SizeMap& sm : sizes) {
    Frame frame{sm, 2, cap};

    std::vector<std::uint64_t> slot_sizes;
    for (const auto& sl : slots)
      slot_sizes.push_back(frame.size_of(sl.instance));
    std::vector<std::uint64_t> var_sizes;
    for (const auto& [name, ty] : fvs) var_sizes.push_back(frame.size_of(ty));

    // Mixed-radix enumeration, first slot most significant.
    std::vector<std::uint64_t> interp(slots.size(), 0);
    for (;;) {
      Model m;
      m.frame = frame;
      m.sig = &env.sig;
      for (std::size_t i = 0; i < slots.size(); ++i)
        m.consts[slots[i].name][slots[i].instance_str] =
            Elem{slots[i].instance, interp[i]};

      // One evaluator per model: its memo carries subterm values across
      // the axiom checks and every valuation of the free variables.
      Evaluator ev(m);
      bool axioms_hold = true;
      for (const auto& ax : axiom_cores) {
        ev.scope.clear();
        if (ev.eval(ax).idx != 1) {
          axioms_hold = false;
          break;
        }
      }
      if (axioms_hold) {
        ++result.models_checked;
        std::vector<std::uint64_t> val(fvs.size(), 0);
        for (;;) {
          ev.scope.clear();
          std::size_t vi = 0;
          for (const auto& [name, ty] : fvs)
            ev.scope.emplace_back(name, Elem{ty, val[vi++]});
          if (ev.eval(core).idx != 1) {
            Countermodel cm;
            cm.sizes = sm;
            cm.model = m;
            for (const auto& [name, el] : ev.scope) cm.val[name] = el;
            for (const auto& sl : slots)
              cm.const_order.push_back(sl.name + " : " + sl.instance_str);
            for (const auto& [name, ty] : fvs) cm.var_order.push_back(name);
            result.valid = false;
            result.counter = std::move(cm);
            return result;
          }
          // advance valuation, last variable fastest
          std::size_t k = val.size();
          while (k > 0) {
            --k;
            if (++val[k] < var_sizes[k]) break;
            val[k] = 0;
            if (k == 0) goto vals_done;
          }
          if (val.empty()) break;
        }
      vals_done:;
      }

      // advance interpretation, last slot fastest
      std::size_t k = interp.size();
      while (k > 0) {
        --k;
        if (++interp[k] < slot_sizes[k]) break;
        interp[k] = 0;
        if (k == 0) goto interps_done;
      }
      if (interp.empty()) break;
    }
  interps_done:;
  }
  return result;
}

std::vector<SizeMap> uniform_sizes(const TheoryEnv& env, std::uint64_t n) {
  SizeMap sm;
  for (const auto& b : env.sig.type_consts)
    if (b != "o") sm[b] = n;
  return {sm};
}

// ---------------------------------------------------------------------------
// Frame correspondence

namespace {

bool rel_at(const std::vector<std::uint64_t>& bits, std::uint64_t n,
            std::uint64_t x, std::uint64_t y) {
  return bits[x * n + y] != 0;
}

bool prop_on(FrameProp prop, const std::vector<std::uint64_t>& bits,
             std::uint64_t n) {
  switch (prop) {
    case FrameProp::None:
      return true;
    case FrameProp::Reflexive:
      for (std::uint64_t x = 0; x < n; ++x)
        if (!rel_at(bits, n, x, x)) return false;
      return true;
    case FrameProp::Transitive:
      for (std::uint64_t x = 0; x < n; ++x)
        for (std::uint64_t y = 0; y < n; ++y)
          for (std::uint64_t z = 0; z < n; ++z)
            if (rel_at(bits, n, x, y) && rel_at(bits, n, y, z) &&
                !rel_at(bits, n, x, z))
              return false;
      return true;
    case FrameProp::Symmetric:
      for (std::uint64_t x = 0; x < n; ++x)
        for (std::uint64_t y = 0; y < n; ++y)
          if (rel_at(bits, n, x, y) && !rel_at(bits, n, y, x)) return false;
      return true;
    case FrameProp::Euclidean:
      for (std::uint64_t x = 0; x < n; ++x)
        for (std::uint64_t y = 0; y < n; ++y)
          for (std::uint64_t z = 0; z < n; ++z)
            if (rel_at(bits, n, x, y) && rel_at(bits, n, x, z) &&
                !rel_at(bits, n, y, z))
              return false;
      return true;
  }
  return true;
}

}  // namespace

FrameReport frame_correspondence(const TermPtr& schema, FrameProp prop,
                                 unsigned max_worlds, const TheoryEnv& env) {
  if (!env.sig.has_type("w"))
    throw theory_error("frame correspondence needs base type w");
  const ConstInfo* r = env.sig.find_const("R");
  if (!r || r->origin != ConstOrigin::Declared)
    throw theory_error("frame correspondence needs a declared constant R");

  Elaborated e = elaborate(schema, env);
  {
    TypeSubst s;
    unify(e.type, ty_o(), s);
    e.term = zonk_term(e.term, s);
  }
  TermPtr core = beta_normalize(unfold(e.term, env));
  std::map<std::string, TypePtr> fvs = free_vars(core);
  for (const auto& [name, ty] : fvs)
    if (!ty || !is_concrete(ty))
      throw eval_error("free variable '" + name + "' has a schematic type");

  TypePtr w = ty_base("w");
  TypePtr rel_ty = ty_arrow(w, ty_arrow(w, ty_o()));
  std::string rel_str = show_type(rel_ty);

  FrameReport report;
  for (std::uint64_t n = 1; n <= max_worlds; ++n) {
    Frame frame{SizeMap{{"w", n}}, 2, kDefaultCap};
    std::vector<std::uint64_t> var_sizes;
    for (const auto& [name, ty] : fvs) var_sizes.push_back(frame.size_of(ty));
    std::uint64_t rel_count = 1;
    for (std::uint64_t i = 0; i < n * n; ++i) rel_count *= 2;

    for (std::uint64_t rel_idx = 0; rel_idx < rel_count; ++rel_idx) {
      Model m;
      m.frame = frame;
      m.sig = &env.sig;
      m.consts["R"][rel_str] = Elem{rel_ty, rel_idx};

      // Decode the table once for the first-order side.  The canonical
      // index of w -> (w -> o) lists, for each x, the inner function
      // (w -> o) whose bits are R(x, -): bit y of digit x is R(x,y).
      std::vector<std::uint64_t> bits(n * n, 0);
      {
        Elem rel{rel_ty, rel_idx};
        for (std::uint64_t x = 0; x < n; ++x) {
          Elem row = apply_elem(frame, rel, Elem{w, x});
          for (std::uint64_t y = 0; y < n; ++y)
            bits[x * n + y] = apply_elem(frame, row, Elem{w, y}).idx;
        }
      }

      Evaluator ev(m);
      bool schema_valid = true;
      std::vector<std::uint64_t> val(fvs.size(), 0);
      for (;;) {
        ev.scope.clear();
        std::size_t vi = 0;
        for (const auto& [name, ty] : fvs)
          ev.scope.emplace_back(name, Elem{ty, val[vi++]});
        if (ev.eval(core).idx != 1) {
          schema_valid = false;
          break;
        }
        std::size_t k = val.size();
        while (k > 0) {
          --k;
          if (++val[k] < var_sizes[k]) break;
          val[k] = 0;
          if (k == 0) goto schema_done;
        }
        if (val.empty()) break;
      }
    schema_done:;

      bool holds = prop_on(prop, bits, n);
      ++report.frames_checked;
      if (schema_valid != holds)
        report.mismatches.push_back(
            FrameReport::Mismatch{n, rel_idx, schema_valid, holds});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// B-valued evaluation

Elem eval_bvalued(const TermPtr& t, const TheoryEnv& env, const BoolAlg& alg,
                  const std::string& base, std::uint64_t base_size,
                  const QFunction& q, std::uint64_t cap) {
  if (q.n() != base_size)
    throw eval_error("q table covers " + std::to_string(q.n()) +
                     " elements but |" + base + "| = " +
                     std::to_string(base_size));
  QValidation qv = validate_q(q, alg);
  if (!qv.ok) throw eval_error("invalid equality table: " + qv.violation);

  Elaborated e = elaborate(t, env);
  TermPtr core = beta_normalize(unfold(e.term, env));

  Model m;
  m.frame = Frame{SizeMap{{base, base_size}}, alg.size(), cap};
  m.sig = &env.sig;
  m.alg = &alg;
  m.q = &q;
  m.q_base = base;
  return denote(core, m, {});
}

}  // namespace holq
