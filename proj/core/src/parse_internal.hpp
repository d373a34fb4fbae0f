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

// Cursor-level parsing entry points shared between parser.cpp and the
// theory-file directive reader.  Not installed.

#ifndef HOLQ_SRC_PARSE_INTERNAL_HPP
#define HOLQ_SRC_PARSE_INTERNAL_HPP

#include "holq/theory.hpp"
#include "lexer.hpp"

namespace holq {

// Directive keywords; they terminate application chains so that terms
// embedded in theory files cannot swallow the next directive.
bool is_reserved_word(const std::string& s);

TypePtr parse_type_at(Cursor& c);
TermPtr parse_term_at(Cursor& c, const TheoryEnv& env, bool strict);

}  // namespace holq

#endif
