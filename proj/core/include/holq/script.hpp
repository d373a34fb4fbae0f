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

#ifndef HOLQ_SCRIPT_HPP
#define HOLQ_SCRIPT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holq/boolalg.hpp"
#include "holq/semantics.hpp"
#include "holq/theory.hpp"

namespace holq {

// Options shared by the CLI and by run_file/run_text.
struct RunOptions {
  std::optional<std::vector<SizeMap>> sizes;  // default: declared bases at 2
  std::uint64_t cap = kDefaultCap;
  std::optional<unsigned> atoms;      // B-valued algebra for eval checks
  std::optional<QFunction> q;         // q table; crisp when absent
  std::string q_base = "i";           // base type q speaks about
  bool strict = false;                // unknown identifiers are errors
  bool timings = true;
};

// Parses "i=2,w=1..3" into the cross product of size assignments.
std::vector<SizeMap> parse_sizes(const std::string& spec);

// Loads {"q": [[...]]} (algebra-element bitmasks) from JSON text.
QFunction parse_q_json(const std::string& text);

enum class Verdict { Pass, Fail, Error, CapExceeded };

struct CheckOutcome {
  int index = 0;
  std::string name;  // user label or "check<N>"
  std::string kind;
  Verdict verdict = Verdict::Pass;
  std::string detail;  // countermodel, value, normal forms, error text
  double ms = 0.0;
};

// Exit-status contract: 0 all checks passed, 1 some check failed,
// 2 input error (parse/type), 3 resource cap exceeded.
struct RunReport {
  std::vector<CheckOutcome> checks;
  std::string input_error;  // nonempty aborts the run with exit 2

  int exit_code() const;
  std::string render(bool timings) const;
  std::string render_json(bool timings) const;
};

RunReport run_file(const std::string& path, const RunOptions& opt);
RunReport run_text(const std::string& text, const std::string& where,
                   const RunOptions& opt, const std::string& base_dir = ".");

// `holq dualize`: parse the expression in an environment (q0 by default,
// or the environment built from a theory file), dualize, print.
std::string dualize_expr(const std::string& expr, const TheoryEnv& env);

}  // namespace holq

#endif
