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

#ifndef HOLQ_TYPE_HPP
#define HOLQ_TYPE_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace holq {

// Simple types: named base types ("o" is always present), schematic type
// variables (written 'a), and right-associative arrows.  Values are
// immutable and shared.
struct Type;
using TypePtr = std::shared_ptr<const Type>;

struct Type {
  enum class Kind { Base, Var, Arrow };
  Kind kind;
  std::string name;  // Base, Var (variable names are stored without the quote)
  TypePtr dom, cod;  // Arrow
};

TypePtr ty_base(std::string name);
TypePtr ty_var(std::string name);
TypePtr ty_arrow(TypePtr dom, TypePtr cod);
TypePtr ty_arrow(std::vector<TypePtr> doms, TypePtr cod);
const TypePtr& ty_o();  // the type of truth values

bool type_equal(const TypePtr& a, const TypePtr& b);
bool is_concrete(const TypePtr& t);  // true iff no type variables occur

// Free type variables in first-occurrence order, without duplicates.
void collect_type_vars(const TypePtr& t, std::vector<std::string>& out);

// Simultaneous substitution of type variables.
TypePtr apply_type_map(const TypePtr& t, const std::map<std::string, TypePtr>& m);

std::string show_type(const TypePtr& t);

}  // namespace holq

#endif
