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

#include "holq/type.hpp"

#include <algorithm>

namespace holq {

TypePtr ty_base(std::string name) {
  auto t = std::make_shared<Type>();
  t->kind = Type::Kind::Base;
  t->name = std::move(name);
  return t;
}

TypePtr ty_var(std::string name) {
  auto t = std::make_shared<Type>();
  t->kind = Type::Kind::Var;
  t->name = std::move(name);
  return t;
}

TypePtr ty_arrow(TypePtr dom, TypePtr cod) {
  auto t = std::make_shared<Type>();
  t->kind = Type::Kind::Arrow;
  t->dom = std::move(dom);
  t->cod = std::move(cod);
  return t;
}

TypePtr ty_arrow(std::vector<TypePtr> doms, TypePtr cod) {
  TypePtr r = std::move(cod);
  for (auto it = doms.rbegin(); it != doms.rend(); ++it) r = ty_arrow(*it, r);
  return r;
}

const TypePtr& ty_o() {
  static const TypePtr o = ty_base("o");
  return o;
}

bool type_equal(const TypePtr& a, const TypePtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Type::Kind::Base:
    case Type::Kind::Var:
      return a->name == b->name;
    case Type::Kind::Arrow:
      return type_equal(a->dom, b->dom) && type_equal(a->cod, b->cod);
  }
  return false;
}

bool is_concrete(const TypePtr& t) {
  if (!t) return false;
  switch (t->kind) {
    case Type::Kind::Base: return true;
    case Type::Kind::Var: return false;
    case Type::Kind::Arrow: return is_concrete(t->dom) && is_concrete(t->cod);
  }
  return false;
}

void collect_type_vars(const TypePtr& t, std::vector<std::string>& out) {
  if (!t) return;
  switch (t->kind) {
    case Type::Kind::Base: return;
    case Type::Kind::Var:
      if (std::find(out.begin(), out.end(), t->name) == out.end())
        out.push_back(t->name);
      return;
    case Type::Kind::Arrow:
      collect_type_vars(t->dom, out);
      collect_type_vars(t->cod, out);
      return;
  }
}

TypePtr apply_type_map(const TypePtr& t, const std::map<std::string, TypePtr>& m) {
  if (!t || m.empty()) return t;
  switch (t->kind) {
    case Type::Kind::Base: return t;
    case Type::Kind::Var: {
      auto it = m.find(t->name);
      return it == m.end() ? t : it->second;
    }
    case Type::Kind::Arrow: {
      TypePtr d = apply_type_map(t->dom, m);
      TypePtr c = apply_type_map(t->cod, m);
      if (d.get() == t->dom.get() && c.get() == t->cod.get()) return t;
      return ty_arrow(d, c);
    }
  }
  return t;
}

static void show_type_rec(const TypePtr& t, bool at_dom, std::string& out) {
  switch (t->kind) {
    case Type::Kind::Base: out += t->name; return;
    case Type::Kind::Var:
      out += '\'';
      out += t->name;
      return;
    case Type::Kind::Arrow:
      if (at_dom) out += '(';
      show_type_rec(t->dom, true, out);
      out += " -> ";
      show_type_rec(t->cod, false, out);
      if (at_dom) out += ')';
      return;
  }
}

std::string show_type(const TypePtr& t) {
  if (!t) return "<?>";
  std::string out;
  show_type_rec(t, false, out);
  return out;
}

}  // namespace holq
