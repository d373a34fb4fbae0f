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

#include "holq/boolalg.hpp"

namespace holq {

std::string BoolAlg::show(std::uint64_t a) const {
  std::string out = "{";
  bool first = true;
  for (unsigned i = 0; i < atoms; ++i) {
    if (a & (1ull << i)) {
      if (!first) out += ",";
      out += "a" + std::to_string(i);
      first = false;
    }
  }
  return out + "}";
}

QValidation validate_q(const QFunction& q, const BoolAlg& alg) {
  const std::size_t n = q.n();
  for (const auto& row : q.table)
    if (row.size() != n) return {false, "table is not square"};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (q.at(x, y) & ~alg.top())
        return {false, "q(" + std::to_string(x) + "," + std::to_string(y) +
                           ") is not an algebra element"};
  for (std::size_t x = 0; x < n; ++x)
    if (q.at(x, x) != alg.top())
      return {false, "q(" + std::to_string(x) + "," + std::to_string(x) +
                         ") = " + alg.show(q.at(x, x)) +
                         " but reflexivity requires the top element"};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (q.at(x, y) != q.at(y, x))
        return {false, "q is not commutative at (" + std::to_string(x) + "," +
                           std::to_string(y) + "): " + alg.show(q.at(x, y)) +
                           " vs " + alg.show(q.at(y, x))};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (!alg.leq(alg.meet(q.at(x, y), q.at(x, z)), q.at(y, z)))
          return {false, "graded transitivity q(x,y)*q(x,z) <= q(y,z) fails "
                         "at x=" + std::to_string(x) + ", y=" +
                         std::to_string(y) + ", z=" + std::to_string(z)};
  return {true, ""};
}

QFunction crisp_q(std::size_t n, const BoolAlg& alg) {
  QFunction q;
  q.table.assign(n, std::vector<std::uint64_t>(n, BoolAlg::bottom));
  for (std::size_t i = 0; i < n; ++i) q.table[i][i] = alg.top();
  return q;
}

}  // namespace holq
