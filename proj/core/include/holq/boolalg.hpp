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

#ifndef HOLQ_BOOLALG_HPP
#define HOLQ_BOOLALG_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace holq {

// Finite Boolean algebra as the powerset of `atoms` generators; elements
// are bitmasks.  atoms == 1 is the two-element algebra of standard
// semantics.
struct BoolAlg {
  unsigned atoms;

  explicit BoolAlg(unsigned k) : atoms(k) {}
  std::uint64_t size() const { return 1ull << atoms; }
  std::uint64_t top() const { return (1ull << atoms) - 1; }
  static constexpr std::uint64_t bottom = 0;

  std::uint64_t meet(std::uint64_t a, std::uint64_t b) const { return a & b; }
  std::uint64_t join(std::uint64_t a, std::uint64_t b) const { return a | b; }
  std::uint64_t cmpl(std::uint64_t a) const { return ~a & top(); }
  std::uint64_t imp(std::uint64_t a, std::uint64_t b) const { return cmpl(a) | b; }
  std::uint64_t iff(std::uint64_t a, std::uint64_t b) const {
    return ~(a ^ b) & top();
  }
  bool leq(std::uint64_t a, std::uint64_t b) const { return (a & ~b) == 0; }

  std::string show(std::uint64_t a) const;  // "{a0,a2}", "{}" for bottom
};

// Candidate interpretation of equality at a base type with n elements:
// q[x][y] is an algebra element.  Valid interpretations are commutative,
// reflexive up to top (q(x,x) = 1), and transitive in the graded sense
// q(x,y) * q(x,z) <= q(y,z).
struct QFunction {
  std::vector<std::vector<std::uint64_t>> table;

  std::size_t n() const { return table.size(); }
  std::uint64_t at(std::size_t x, std::size_t y) const { return table[x][y]; }
};

struct QValidation {
  bool ok = true;
  std::string violation;  // human-readable witness when !ok
};

QValidation validate_q(const QFunction& q, const BoolAlg& alg);

// The crisp q: top on the diagonal, bottom elsewhere.  Always valid.
QFunction crisp_q(std::size_t n, const BoolAlg& alg);

}  // namespace holq

#endif
