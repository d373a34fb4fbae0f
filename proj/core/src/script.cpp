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

#include "holq/script.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "holq/base_theory.hpp"
#include "holq/error.hpp"
#include "holq/parser.hpp"
#include "holq/printer.hpp"
#include "holq/reduction.hpp"
#include "holq/theory_text.hpp"
#include "holq/typecheck.hpp"

namespace holq {

std::vector<SizeMap> parse_sizes(const std::string& spec) {
  std::vector<std::tuple<std::string, std::uint64_t, std::uint64_t>> ranges;
  std::istringstream in(spec);
  std::string entry;
  while (std::getline(in, entry, ',')) {
    auto eq = entry.find('=');
    if (eq == std::string::npos)
      throw theory_error("malformed sizes entry '" + entry +
                         "' (want name=N or name=LO..HI)");
    std::string name = entry.substr(0, eq);
    std::string range = entry.substr(eq + 1);
    if (name.empty() || range.empty())
      throw theory_error("malformed sizes entry '" + entry + "'");
    std::uint64_t lo, hi;
    auto dots = range.find("..");
    try {
      if (dots == std::string::npos) {
        lo = hi = std::stoull(range);
      } else {
        lo = std::stoull(range.substr(0, dots));
        hi = std::stoull(range.substr(dots + 2));
      }
    } catch (const std::exception&) {
      throw theory_error("malformed size range '" + range + "'");
    }
    if (lo < 1 || hi < lo)
      throw theory_error("bad size range for '" + name +
                         "': sizes start at 1 and ranges go low..high");
    for (const auto& [n, l, h] : ranges)
      if (n == name) throw theory_error("duplicate base '" + name + "' in sizes");
    ranges.emplace_back(name, lo, hi);
  }
  if (ranges.empty()) throw theory_error("empty sizes specification");
  std::vector<SizeMap> out{SizeMap{}};
  for (const auto& [name, lo, hi] : ranges) {
    std::vector<SizeMap> next;
    next.reserve(out.size() * (hi - lo + 1));
    for (const auto& sm : out)
      for (std::uint64_t v = lo; v <= hi; ++v) {
        SizeMap m = sm;
        m[name] = v;
        next.push_back(std::move(m));
      }
    out = std::move(next);
  }
  return out;
}

QFunction parse_q_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw theory_error(std::string("bad q table JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("q") || !j["q"].is_array())
    throw theory_error("q table JSON must be {\"q\": [[...], ...]}");
  QFunction q;
  for (const auto& row : j["q"]) {
    if (!row.is_array())
      throw theory_error("q table rows must be arrays of integers");
    std::vector<std::uint64_t> r;
    for (const auto& cell : row) {
      if (!cell.is_number_unsigned())
        throw theory_error("q table entries must be nonnegative integers");
      r.push_back(cell.get<std::uint64_t>());
    }
    q.table.push_back(std::move(r));
  }
  return q;
}

namespace {

std::vector<SizeMap> default_sizes(const TheoryEnv& env) {
  SizeMap sm;
  for (const auto& b : env.sig.type_consts)
    if (b != "o") sm[b] = 2;
  return {sm};
}

void run_one(const CheckSpec& spec, const TheoryEnv& env,
             const RunOptions& opt, CheckOutcome& out) {
  std::vector<SizeMap> sizes;
  if (!spec.sizes.empty())
    sizes = parse_sizes(spec.sizes);
  else if (opt.sizes)
    sizes = *opt.sizes;
  else
    sizes = default_sizes(env);
  std::uint64_t cap = spec.cap.empty() ? opt.cap : std::stoull(spec.cap);

  if (spec.kind == "valid" || spec.kind == "countermodel") {
    ValidityResult r = check_valid(spec.lhs, env, sizes, cap);
    bool want_valid = spec.kind == "valid";
    if (r.valid == want_valid) {
      out.verdict = Verdict::Pass;
      out.detail = r.valid
                       ? "valid across " + std::to_string(r.models_checked) +
                             " models"
                       : "countermodel:\n" +
                             render_countermodel(*r.counter, "    ");
    } else {
      out.verdict = Verdict::Fail;
      out.detail = r.valid
                       ? "no countermodel in " +
                             std::to_string(r.models_checked) + " models"
                       : "countermodel:\n" +
                             render_countermodel(*r.counter, "    ");
    }
    return;
  }

  if (spec.kind == "normal-eq") {
    if (!spec.rhs)
      throw theory_error("normal-eq needs two terms: check normal-eq : s == t");
    if (betaeta_equal(spec.lhs, spec.rhs, env)) {
      out.verdict = Verdict::Pass;
      out.detail = show_term(normalize(spec.lhs, env), env.notations);
    } else {
      out.verdict = Verdict::Fail;
      out.detail =
          "normal forms differ:\n    " +
          show_term(normalize(spec.lhs, env), env.notations) + "\n    " +
          show_term(normalize(spec.rhs, env), env.notations);
    }
    return;
  }

  if (spec.kind == "eval") {
    unsigned atoms = 0;
    if (!spec.atoms.empty())
      atoms = static_cast<unsigned>(std::stoul(spec.atoms));
    else if (opt.atoms)
      atoms = *opt.atoms;

    if (atoms > 0) {
      if (atoms > 16) throw theory_error("atoms is limited to 16");
      BoolAlg alg(atoms);
      std::uint64_t base_size = 2;
      if (auto it = sizes[0].find(opt.q_base); it != sizes[0].end())
        base_size = it->second;
      QFunction q = opt.q ? *opt.q : crisp_q(base_size, alg);
      Frame frame{SizeMap{{opt.q_base, base_size}}, alg.size(), cap};
      Elem v = eval_bvalued(spec.lhs, env, alg, opt.q_base, base_size, q, cap);
      if (spec.rhs) {
        Elem w = eval_bvalued(spec.rhs, env, alg, opt.q_base, base_size, q, cap);
        out.verdict = elem_equal(v, w) ? Verdict::Pass : Verdict::Fail;
        out.detail = render_elem(v, frame) + " vs " + render_elem(w, frame);
      } else {
        out.verdict = Verdict::Pass;
        out.detail = render_elem(v, frame);
      }
      return;
    }

    Model m;
    m.frame = Frame{sizes[0], 2, cap};
    m.sig = &env.sig;
    auto value = [&](const TermPtr& t) {
      Elaborated e = elaborate(t, env);
      return denote(beta_normalize(unfold(e.term, env)), m, {});
    };
    Elem v = value(spec.lhs);
    if (spec.rhs) {
      Elem w = value(spec.rhs);
      out.verdict = elem_equal(v, w) ? Verdict::Pass : Verdict::Fail;
      out.detail = render_elem(v, m.frame) + " vs " + render_elem(w, m.frame);
    } else {
      out.verdict = Verdict::Pass;
      out.detail = render_elem(v, m.frame);
    }
    return;
  }

  if (spec.kind == "dualize") {
    TermPtr dual = beta_normalize(dualize(spec.lhs, env));
    if (spec.rhs) {
      // dualize twice = unfold-except-D, so the expected side reaches the
      // same Q/D core without a second code path.
      TermPtr expected = beta_normalize(dualize(dualize(spec.rhs, env), env));
      out.verdict = alpha_equal_mod_tyvars(dual, expected) ? Verdict::Pass
                                                           : Verdict::Fail;
      out.detail = show_term(dual, env.notations) +
                   (out.verdict == Verdict::Pass
                        ? ""
                        : "\n    expected: " +
                              show_term(expected, env.notations));
    } else {
      out.verdict = Verdict::Pass;
      out.detail = show_term(dual, env.notations);
    }
    return;
  }

  throw theory_error("unknown check kind '" + spec.kind + "'");
}

}  // namespace

RunReport run_text(const std::string& text, const std::string& where,
                   const RunOptions& opt, const std::string& base_dir) {
  RunReport report;
  try {
    apply_directives(
        TheoryEnv::kernel(), text, where, base_dir, opt.strict,
        [&](const CheckSpec& spec, const TheoryEnv& env) {
          CheckOutcome out;
          out.index = static_cast<int>(report.checks.size()) + 1;
          out.name = spec.name.empty() ? "check" + std::to_string(out.index)
                                       : spec.name;
          out.kind = spec.kind;
          auto t0 = std::chrono::steady_clock::now();
          try {
            run_one(spec, env, opt, out);
          } catch (const cap_error& e) {
            out.verdict = Verdict::CapExceeded;
            out.detail = e.what();
          } catch (const std::exception& e) {
            out.verdict = Verdict::Error;
            out.detail = e.what();
          }
          out.ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
          report.checks.push_back(std::move(out));
        });
  } catch (const std::exception& e) {
    report.input_error = e.what();
  }
  return report;
}

RunReport run_file(const std::string& path, const RunOptions& opt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    RunReport report;
    report.input_error = "cannot open '" + path + "'";
    return report;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  std::filesystem::path p(path);
  return run_text(ss.str(), path, opt, p.parent_path().string());
}

int RunReport::exit_code() const {
  if (!input_error.empty()) return 2;
  bool capped = false, errored = false, failed = false;
  for (const auto& c : checks) {
    capped |= c.verdict == Verdict::CapExceeded;
    errored |= c.verdict == Verdict::Error;
    failed |= c.verdict == Verdict::Fail;
  }
  if (capped) return 3;
  if (errored) return 2;
  if (failed) return 1;
  return 0;
}

namespace {

const char* verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Error: return "ERROR";
    case Verdict::CapExceeded: return "CAP-EXCEEDED";
  }
  return "?";
}

const char* verdict_json(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Error: return "error";
    case Verdict::CapExceeded: return "cap-exceeded";
  }
  return "?";
}

}  // namespace

std::string RunReport::render(bool timings) const {
  std::ostringstream os;
  if (!input_error.empty()) {
    os << "error: " << input_error << "\n";
    return os.str();
  }
  int passed = 0, failed = 0, errors = 0, capped = 0;
  for (const auto& c : checks) {
    os << "[" << c.index << "] " << c.name << " (" << c.kind
       << "): " << verdict_str(c.verdict);
    if (timings) {
      os.setf(std::ios::fixed);
      os.precision(1);
      os << "  (" << c.ms << " ms)";
    }
    os << "\n";
    if (!c.detail.empty()) {
      std::istringstream lines(c.detail);
      std::string line;
      while (std::getline(lines, line)) os << "    " << line << "\n";
    }
    switch (c.verdict) {
      case Verdict::Pass: ++passed; break;
      case Verdict::Fail: ++failed; break;
      case Verdict::Error: ++errors; break;
      case Verdict::CapExceeded: ++capped; break;
    }
  }
  os << checks.size() << " checks: " << passed << " passed, " << failed
     << " failed, " << errors << " errors, " << capped << " capped\n";
  return os.str();
}

std::string RunReport::render_json(bool timings) const {
  nlohmann::json j;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["index"] = c.index;
    e["name"] = c.name;
    e["kind"] = c.kind;
    e["verdict"] = verdict_json(c.verdict);
    e["detail"] = c.detail;
    if (timings) e["ms"] = c.ms;
    j["checks"].push_back(std::move(e));
  }
  if (!input_error.empty()) j["input_error"] = input_error;
  j["exit_code"] = exit_code();
  return j.dump(2) + "\n";
}

std::string dualize_expr(const std::string& expr, const TheoryEnv& env) {
  TermPtr t = parse_term(expr, env);
  TermPtr dual = beta_normalize(dualize(t, env));
  return show_term(dual, env.notations);
}

}  // namespace holq
