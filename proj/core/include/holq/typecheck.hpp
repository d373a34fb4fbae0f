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

#ifndef HOLQ_TYPECHECK_HPP
#define HOLQ_TYPECHECK_HPP

#include <map>
#include <string>
#include <vector>

#include "holq/theory.hpp"

namespace holq {

// Idempotent substitution on type variables produced by unification.
struct TypeSubst {
  std::map<std::string, TypePtr> map;

  TypePtr walk(const TypePtr& t) const;   // resolve the head variable chain
  TypePtr apply(const TypePtr& t) const;  // deep application
};

// Most general unifier, extending s in place.  Throws type_error on clash
// or occurs-check failure.
void unify(const TypePtr& a, const TypePtr& b, TypeSubst& s);

// Deep application of s to every annotation of t; drops consumed hints.
TermPtr zonk_term(const TermPtr& t, const TypeSubst& s);

// One constant occurrence with its resolved instance type.
struct Occurrence {
  std::string const_name;
  std::vector<TypePtr> type_args;
  TypePtr instance_type;
};

struct Elaborated {
  TermPtr term;   // every node annotated; constants carry type_args
  TypePtr type;   // principal type; may contain schematic variables
};

// Hindley-Milner-style inference restricted to rank-1 schemes at
// constants.  Binder annotations participate in unification (conflicts
// are unification failures, not overrides).  Fresh variables are
// counter-based 't0, 't1, ..., skipping names present in the input.
Elaborated elaborate(const TermPtr& t, const TheoryEnv& env,
                     std::vector<Occurrence>* occurrences = nullptr);

TypePtr infer_type(const TermPtr& t, const TheoryEnv& env);

// Canonically rename the type variables of an instance type so that
// instantiations can be compared up to renaming.
std::string canonical_instance(const TypePtr& t);

// Evidence that one constant can occur at several distinct instantiations
// inside a single term (the schematic-constants design in action).
struct InstantiationDemo {
  struct Entry {
    std::string const_name;
    std::string instance;  // canonicalized instance type
  };
  std::vector<Entry> occurrences;                          // term order
  std::map<std::string, std::set<std::string>> instances;  // per constant

  std::size_t distinct(const std::string& const_name) const;
  std::string render() const;
};

InstantiationDemo check_distinct_instantiation_demo(const TermPtr& t,
                                                    const TheoryEnv& env);

}  // namespace holq

#endif
