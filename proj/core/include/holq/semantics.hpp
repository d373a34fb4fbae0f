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

#ifndef HOLQ_SEMANTICS_HPP
#define HOLQ_SEMANTICS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holq/boolalg.hpp"
#include "holq/theory.hpp"

namespace holq {

inline constexpr std::uint64_t kDefaultCap = 1'000'000;

// Assignment of finite cardinalities to base types.
using SizeMap = std::map<std::string, std::uint64_t>;

// Finite standard frame: full function spaces over the assigned base
// sizes.  Every domain is canonically enumerated, so an element is just
// its index; functions are mixed-radix encodings of their tables, making
// structural equality an integer comparison (full spaces are extensional).
struct Frame {
  SizeMap bases;
  std::uint64_t o_size = 2;  // 2^k in B-valued mode
  std::uint64_t cap = kDefaultCap;

  std::uint64_t size_of(const TypePtr& ty) const;  // throws cap_error
};

struct Elem {
  TypePtr ty;
  std::uint64_t idx;
};

inline bool elem_equal(const Elem& a, const Elem& b) {
  return a.idx == b.idx && type_equal(a.ty, b.ty);
}

std::vector<Elem> enumerate_domain(const TypePtr& ty, const Frame& f);

// f must have arrow type; returns f's table entry at a.
Elem apply_elem(const Frame& f, const Elem& fn, const Elem& a);

// Builds the element of dom -> cod whose table is given pointwise.
Elem elem_from_fn(const Frame& f, const TypePtr& dom, const TypePtr& cod,
                  const std::function<std::uint64_t(std::uint64_t)>& fn);

// A model: frame plus interpretations for declared constants (keyed by
// name and concrete instance type).  Q denotes structural identity at
// every instance and is not configurable; D its complement.  Description
// constants pick the first element of the denoted set, or the default.
// In B-valued mode (`alg` set) D_o is the algebra carrier and Q at the
// distinguished base is given by `q`, lifted pointwise through arrows by
// iterated meets.
struct Model {
  Frame frame;
  std::map<std::string, std::map<std::string, Elem>> consts;
  std::map<std::string, std::uint64_t> iota_default;  // base -> index, 0 if absent
  const Signature* sig = nullptr;                     // for descr_consts lookup

  const BoolAlg* alg = nullptr;
  const QFunction* q = nullptr;
  std::string q_base;  // base type q speaks about
};

using Valuation = std::map<std::string, Elem>;

// Denotation of an elaborated, definition-free term.  Throws eval_error
// for free variables not in v, constants without interpretation, or
// schematic types; cap_error when a domain is too large.
Elem denote(const TermPtr& t, const Model& m, const Valuation& v);

struct Countermodel {
  SizeMap sizes;
  Model model;
  Valuation val;
  std::vector<std::string> const_order;  // deterministic rendering order
  std::vector<std::string> var_order;
};

std::string render_elem(const Elem& e, const Frame& f);
std::string render_countermodel(const Countermodel& cm, const std::string& indent);

struct ValidityResult {
  bool valid = true;
  std::optional<Countermodel> counter;
  std::uint64_t models_checked = 0;
};

// Exhaustive validity over every size assignment in `sizes`: the goal's
// free variables are universally closed, every declared constant occurring
// in goal or axioms ranges over its full domain, axioms filter the models,
// and the first failure in lexicographic (sizes, interpretations,
// valuation) order is returned as the countermodel.
ValidityResult check_valid(const TermPtr& goal, const TheoryEnv& env,
                           const std::vector<SizeMap>& sizes,
                           std::uint64_t cap = kDefaultCap);

// All size assignments over the declared bases of `env` with every size
// equal to n (convenience for tests).
std::vector<SizeMap> uniform_sizes(const TheoryEnv& env, std::uint64_t n);

// ---------------------------------------------------------------------------
// Frame correspondence: brute force over every Kripke frame with at most
// max_worlds worlds, comparing schema validity against a first-order
// frame property.

enum class FrameProp { None, Reflexive, Transitive, Symmetric, Euclidean };

struct FrameReport {
  std::uint64_t frames_checked = 0;
  struct Mismatch {
    std::uint64_t worlds;
    std::uint64_t rel_idx;
    bool schema_valid;
    bool prop_holds;
  };
  std::vector<Mismatch> mismatches;
  bool equivalent() const { return mismatches.empty(); }
};

// env must declare base type `w` and constant R : w -> w -> o; the schema
// is a term of type o over R and free set variables (universally read).
FrameReport frame_correspondence(const TermPtr& schema, FrameProp prop,
                                 unsigned max_worlds, const TheoryEnv& env);

// ---------------------------------------------------------------------------
// B-valued evaluation of a closed term whose base types are all `base`,
// with |base| = base_size and D_o the powerset algebra.  Validates q first.

Elem eval_bvalued(const TermPtr& t, const TheoryEnv& env, const BoolAlg& alg,
                  const std::string& base, std::uint64_t base_size,
                  const QFunction& q, std::uint64_t cap = kDefaultCap);

}  // namespace holq

#endif
