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

#ifndef HOLQ_ERROR_HPP
#define HOLQ_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace holq {

// Syntax error with a 1-based source position.
struct parse_error : std::runtime_error {
  int line, col;
  parse_error(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ")"),
        line(line_), col(col_) {}
};

// Unification/inference failure, ill-typed input, bad definition.
struct type_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ill-formed theory: duplicate names, missing definitions, bad packs.
struct theory_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reduction fuel exhausted (only reachable for ill-typed or divergent
// combinator inputs admitted in unchecked mode).
struct reduction_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite domain would exceed the enumeration cap.  `size` saturates at
// UINT64_MAX/2 when the true cardinality is not representable.
struct cap_error : std::runtime_error {
  std::string type_str;
  std::uint64_t size;
  std::uint64_t cap;
  cap_error(std::string type_str_, std::uint64_t size_, std::uint64_t cap_)
      : std::runtime_error("domain for " + type_str_ + " has " +
                           (size_ >= UINT64_MAX / 2 ? std::string("more than 10^18")
                                                    : std::to_string(size_)) +
                           " elements, exceeding cap " + std::to_string(cap_)),
        type_str(std::move(type_str_)), size(size_), cap(cap_) {}
};

// Model evaluation failure: open term, schematic type, missing interpretation.
struct eval_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace holq

#endif
