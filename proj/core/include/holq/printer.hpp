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

#ifndef HOLQ_PRINTER_HPP
#define HOLQ_PRINTER_HPP

#include <string>

#include "holq/theory.hpp"

namespace holq {

// Inverse of the parser up to alpha-equivalence, with minimal parentheses.
// Fully applied Q / D print as infix '=' / '!=', prefix otherwise.  With a
// notation table, declared infixes and binder sugar are used as well.
std::string show_term(const TermPtr& t);
std::string show_term(const TermPtr& t, const NotationTable& table);

}  // namespace holq

#endif
