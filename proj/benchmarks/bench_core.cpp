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

#include <benchmark/benchmark.h>

#include "holq/base_theory.hpp"
#include "holq/parser.hpp"
#include "holq/printer.hpp"
#include "holq/reduction.hpp"
#include "holq/semantics.hpp"

namespace {

const holq::TheoryEnv& env() {
  static const holq::TheoryEnv e = holq::q0_env();
  return e;
}

void BM_ParsePrintRoundTrip(benchmark::State& state) {
  const std::string src =
      "\\P:'a -> o. forall x:'a. (P x -> exists y:'a. P y & x = y)";
  for (auto _ : state) {
    holq::TermPtr t = holq::parse_term(src, env());
    benchmark::DoNotOptimize(holq::show_term(t, env().notations));
  }
}
BENCHMARK(BM_ParsePrintRoundTrip);

void BM_NormalizeConnectives(benchmark::State& state) {
  holq::TermPtr t = holq::parse_term(
      "(p & q -> r) <-> (p -> (q -> r))", env());
  for (auto _ : state)
    benchmark::DoNotOptimize(holq::normalize(t, env()));
}
BENCHMARK(BM_NormalizeConnectives);

void BM_DomainEnumeration(benchmark::State& state) {
  holq::Frame f{holq::SizeMap{{"i", 3}}, 2, holq::kDefaultCap};
  holq::TypePtr ty = holq::parse_type("(i -> o) -> i -> o");
  for (auto _ : state)
    benchmark::DoNotOptimize(holq::enumerate_domain(ty, f));
}
BENCHMARK(BM_DomainEnumeration);

void BM_CheckValidPropositional(benchmark::State& state) {
  holq::TermPtr goal =
      holq::parse_term("((p -> q) -> p) -> p", env());  // Peirce
  std::vector<holq::SizeMap> sizes{holq::SizeMap{}};
  for (auto _ : state)
    benchmark::DoNotOptimize(holq::check_valid(goal, env(), sizes));
}
BENCHMARK(BM_CheckValidPropositional);

void BM_CheckValidDrinker(benchmark::State& state) {
  holq::TheoryEnv e = env();
  holq::declare_type(e, "i");
  holq::TermPtr goal =
      holq::parse_term("exists x:i. (P x -> forall y:i. P y)", e);
  std::vector<holq::SizeMap> sizes{holq::SizeMap{{"i", 3}}};
  for (auto _ : state)
    benchmark::DoNotOptimize(holq::check_valid(goal, e, sizes));
}
BENCHMARK(BM_CheckValidDrinker);

}  // namespace

BENCHMARK_MAIN();
