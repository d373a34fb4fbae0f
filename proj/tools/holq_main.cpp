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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "holq/base_theory.hpp"
#include "holq/script.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "holq: simply typed higher-order logic over a single equality "
      "primitive, with finite-model checking"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run the checks in a theory file");
  std::string file;
  run->add_option("file", file, "theory file")->required();
  std::string sizes_str;
  run->add_option("--sizes", sizes_str,
                  "base type sizes, e.g. i=2 or i=1..3,w=2");
  std::uint64_t cap = holq::kDefaultCap;
  run->add_option("--cap", cap, "enumeration cap per function domain");
  std::string algebra;
  run->add_option("--algebra", algebra,
                  "truth-value algebra for eval checks, e.g. atoms=2");
  std::string q_file;
  run->add_option("--q", q_file, "JSON file {\"q\": [[...]]} with the "
                                 "equality table for the distinguished base");
  std::string q_base = "i";
  run->add_option("--q-base", q_base, "base type the q table describes");
  bool strict = false;
  run->add_flag("--strict", strict, "unknown identifiers are errors");
  bool json = false;
  run->add_flag("--json", json, "machine-readable report");
  bool no_timings = false;
  run->add_flag("--no-timings", no_timings, "suppress per-check timings");

  auto* dual =
      app.add_subcommand("dualize", "Print the equality/disequality dual");
  std::string expr;
  dual->add_option("-e,--expr", expr, "term to dualize")->required();
  std::string env_name = "q0";
  dual->add_option("--env", env_name, "connective layer: q0 or via-negativa");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    holq::RunOptions opt;
    try {
      if (!sizes_str.empty()) opt.sizes = holq::parse_sizes(sizes_str);
      opt.cap = cap;
      if (!algebra.empty()) {
        if (algebra.rfind("atoms=", 0) != 0)
          throw std::runtime_error("--algebra expects atoms=K");
        opt.atoms = static_cast<unsigned>(std::stoul(algebra.substr(6)));
      }
      if (!q_file.empty()) opt.q = holq::parse_q_json(slurp(q_file));
      opt.q_base = q_base;
      opt.strict = strict;
      opt.timings = !no_timings;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    holq::RunReport report = holq::run_file(file, opt);
    std::cout << (json ? report.render_json(opt.timings)
                       : report.render(opt.timings));
    return report.exit_code();
  }

  if (dual->parsed()) {
    try {
      holq::TheoryEnv env = env_name == "via-negativa"
                                ? holq::via_negativa_env()
                                : holq::q0_env();
      if (env_name != "q0" && env_name != "via-negativa")
        throw std::runtime_error("--env must be q0 or via-negativa");
      std::cout << holq::dualize_expr(expr, env) << "\n";
      return 0;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return 0;
}
