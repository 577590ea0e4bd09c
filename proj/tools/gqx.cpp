/*
 * Copyright 2026 gqx contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// gqx: builds the Suzuki and small Ree groups, checks the structural lemmas
// behind their generalized-quadrangle exclusion, and replays the exclusion
// itself.  Exit codes: 0 all verdicts pass, 1 a check failed or a
// falsification occurred, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gqx/verifier.hpp"

namespace {

using namespace gqx;

void emit(const Json& report, const std::string& out_path) {
  std::string text = report.dump(2);
  text.push_back('\n');
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open report path: " + out_path);
    os << text;
  }
}

int cmd_exclude(const std::string& family, unsigned m_min, unsigned m_max,
                const std::string& out) {
  Family fam = family == "sz" ? Family::Suzuki : Family::Ree;
  ExclusionReport rep = run_exclusion(fam, m_min, m_max);
  for (const auto& e : rep.entries)
    std::cout << "m=" << e.m << " q=" << e.q << " -> "
              << (e.excluded ? "excluded" : "NOT-EXCLUDED") << "\n";
  Json j = report_header("exclude");
  j["report"] = to_json(rep);
  if (!out.empty()) emit(j, out);
  return rep.excluded ? 0 : 1;
}

int cmd_structure(const std::string& family, unsigned m, bool extended, const std::string& out) {
  SuiteReport rep =
      family == "sz" ? run_suzuki_suite(m) : run_ree_suite(m, extended);
  for (const auto& c : rep.checks)
    std::cout << (c.pass ? "pass " : "FAIL ") << c.id << " expected=" << c.expected
              << " observed=" << c.observed << (c.note.empty() ? "" : "  # " + c.note) << "\n";
  std::cout << (rep.pass ? "suite: pass" : "suite: FAIL") << "\n";
  Json j = report_header("structure");
  j["report"] = to_json(rep);
  if (!out.empty()) emit(j, out);
  return rep.pass ? 0 : 1;
}

int cmd_gq_check(const std::string& file, const std::string& out) {
  std::ifstream is(file);
  if (!is) {
    std::cerr << "cannot open " << file << "\n";
    return 2;
  }
  IncidenceStructure s = read_incidence(is);
  GqCheckResult res = gq_check(s);
  Json j = report_header("gq-check");
  j["file"] = file;
  if (res.order) {
    std::cout << "(" << res.order->s << "," << res.order->t << ")"
              << (res.thin ? " thin" : "") << "\n";
    j["order"] = {{"s", dec(res.order->s)}, {"t", dec(res.order->t)}};
    j["thin"] = res.thin;
    j["verdict"] = "generalized-quadrangle";
    if (!out.empty()) emit(j, out);
    return 0;
  }
  std::cout << "not a generalized quadrangle: " << gq_failure_name(*res.failure)
            << (res.detail.empty() ? "" : " (" + res.detail + ")") << "\n";
  j["verdict"] = "rejected";
  j["diagnosis"] = gq_failure_name(*res.failure);
  if (!res.detail.empty()) j["detail"] = res.detail;
  if (!out.empty()) emit(j, out);
  return 1;
}

int cmd_gq_solve(std::uint64_t p, unsigned a, unsigned b, const std::string& out) {
  auto sols = prime_power_gq_solve(p, a, b);
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < sols.size(); ++i) {
    if (i) os << ",";
    os << "(" << sols[i].s << "," << sols[i].t << ")";
  }
  os << "}";
  std::cout << os.str() << "\n";
  Json j = report_header("gq-solve");
  j["p"] = dec(p);
  j["a"] = dec(a);
  j["b"] = dec(b);
  Json js = Json::array();
  for (const auto& s : sols) js.push_back({{"s", dec(s.s)}, {"t", dec(s.t)}});
  j["solutions"] = js;
  if (!out.empty()) emit(j, out);
  return 0;
}

int cmd_dump_group(const std::string& family, unsigned m) {
  if (family == "sz") {
    SuzukiGroup g(m);
    std::cout << "degree " << g.degree() << "\n";
    for (const Perm& p : g.group().generators()) std::cout << p.text() << "\n";
  } else {
    ReeGroup g(m);
    std::cout << "degree " << g.degree() << "\n";
    for (const Perm& p : g.group().generators()) std::cout << p.text() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized-quadrangle exclusion toolkit for Sz(q) and R(q)"};
  app.require_subcommand(1);
  app.fallthrough();

  // defaults, overridable by environment then flags
  if (const char* env = std::getenv("GQX_SEED")) gqx::config().seed = std::strtoull(env, nullptr, 0);
  if (const char* env = std::getenv("GQX_MEMORY_CAP"))
    gqx::config().memory_cap_bytes = std::strtoull(env, nullptr, 0);
  std::uint64_t seed = gqx::config().seed;
  std::uint64_t memcap = gqx::config().memory_cap_bytes;
  unsigned threads = 1;
  std::string out;
  app.add_option("--seed", seed, "seed for the deterministic searches");
  app.add_option("--memory-cap", memcap, "memory cap in bytes for class enumeration");
  app.add_option("--threads", threads, "reserved; execution is single-threaded");
  app.add_option("--out", out, "write the JSON report to this path");

  std::string family = "sz";
  unsigned m_min = 1, m_max = 1, m = 1;
  bool extended = false;

  auto* exclude = app.add_subcommand("exclude", "replay the exclusion over a range of m");
  exclude->add_option("--family", family, "sz or ree")->required()->check(CLI::IsMember({"sz", "ree"}));
  exclude->add_option("--m-min", m_min, "first m")->required();
  exclude->add_option("--m-max", m_max, "last m")->required();

  auto* structure = app.add_subcommand("structure", "run the structural lemma suite");
  structure->add_option("--family", family, "sz or ree")->required()->check(CLI::IsMember({"sz", "ree"}));
  structure->add_option("--m", m, "field exponent parameter")->required();
  structure->add_flag("--extended", extended, "also enumerate the large non-real classes");

  auto* gq = app.add_subcommand("gq", "generalized-quadrangle utilities");
  gq->require_subcommand(1);
  std::string file;
  auto* gq_check_cmd = gq->add_subcommand("check", "check the GQ axioms of an incidence file");
  gq_check_cmd->add_option("--file", file, "incidence file")->required();
  std::uint64_t p = 2;
  unsigned a = 1, b = 1;
  auto* gq_solve_cmd = gq->add_subcommand("solve", "solve (s+1)(st+1)=p^a, (t+1)(st+1)=p^b");
  gq_solve_cmd->add_option("--p", p, "prime")->required();
  gq_solve_cmd->add_option("--a", a, "point exponent")->required();
  gq_solve_cmd->add_option("--b", b, "line exponent")->required();

  auto* dump = app.add_subcommand("dump-group", "print generators in the fixture format");
  dump->add_option("--family", family, "sz or ree")->required()->check(CLI::IsMember({"sz", "ree"}));
  dump->add_option("--m", m, "field exponent parameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  gqx::config().seed = seed;
  gqx::config().memory_cap_bytes = memcap;
  gqx::config().threads = threads;

  try {
    if (*exclude) return cmd_exclude(family, m_min, m_max, out);
    if (*structure) return cmd_structure(family, m, extended, out);
    if (*gq_check_cmd) return cmd_gq_check(file, out);
    if (*gq_solve_cmd) return cmd_gq_solve(p, a, b, out);
    if (*dump) return cmd_dump_group(family, m);
  } catch (const gqx::invalid_argument_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
