// Copyright 2026 gqx contributors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include <catch2/catch_amalgamated.hpp>

#include "gqx/verifier.hpp"

using namespace gqx;

TEST_CASE("exclusion holds for every m up to 50 in both families") {
  auto sz = run_exclusion(Family::Suzuki, 1, 50);
  REQUIRE(sz.excluded);
  REQUIRE(sz.entries.size() == 50);
  auto ree = run_exclusion(Family::Ree, 1, 50);
  REQUIRE(ree.excluded);
  for (const auto& e : ree.entries)
    for (const auto& p : e.pairs) REQUIRE(p.solutions.empty());  // p = 3 never solves
}

TEST_CASE("exclusion entry content at m = 1 and m = 4") {
  auto rep = run_exclusion(Family::Suzuki, 1, 1);
  const auto& e = rep.entries[0];
  REQUIRE(e.exponent_set == std::vector<unsigned>{4, 5});
  REQUIRE(e.kinds.size() == 3);  // no subfield kind, 3 is prime
  REQUIRE(e.pairs.size() == 9);
  for (const auto& p : e.pairs) {
    REQUIRE(p.excluded);
    REQUIRE(p.solutions.empty());  // no solutions at all on these exponents
  }
  auto rep4 = run_exclusion(Family::Suzuki, 4, 4);
  REQUIRE(rep4.entries[0].exponent_set == std::vector<unsigned>{12, 16, 17});
  bool has_subfield = false;
  for (const auto& k : rep4.entries[0].kinds)
    if (k.kind == "subfield(3,3)") {
      has_subfield = true;
      REQUIRE(k.exponent == 12);
    }
  REQUIRE(has_subfield);
  REQUIRE(rep4.excluded);
}

TEST_CASE("reports are deterministic and serialize integers as strings") {
  auto r1 = to_json(run_exclusion(Family::Suzuki, 1, 6)).dump(2);
  auto r2 = to_json(run_exclusion(Family::Suzuki, 1, 6)).dump(2);
  REQUIRE(r1 == r2);
  Json j = to_json(run_exclusion(Family::Ree, 1, 2));
  REQUIRE(j["entries"][0]["q"].is_string());
  REQUIRE(j["entries"][0]["q"] == "27");
  REQUIRE(j["entries"][1]["q"] == "243");
  REQUIRE(j["verdict"] == "excluded");
  // every pair record carries its anchor
  for (const auto& e : j["entries"])
    for (const auto& p : e["pairs"]) REQUIRE(p["anchor"] == "prime-power-solver");
}

TEST_CASE("structure suite beyond desk scale reports resource caps") {
  auto rep = run_suzuki_suite(3);
  REQUIRE(rep.pass);
  bool capped = false;
  for (const auto& c : rep.checks)
    if (c.anchor == "resource-cap") capped = true;
  REQUIRE(capped);
  auto ree = run_ree_suite(2, false);
  REQUIRE(ree.pass);
  capped = false;
  for (const auto& c : ree.checks)
    if (c.anchor == "resource-cap") capped = true;
  REQUIRE(capped);
}

TEST_CASE("suzuki suite passes at m = 1") {
  auto rep = run_suzuki_suite(1);
  for (const auto& c : rep.checks) {
    INFO(c.id << " expected=" << c.expected << " observed=" << c.observed);
    CHECK(c.pass);
  }
  REQUIRE(rep.pass);
}

TEST_CASE("subfield embedding entries appear at m = 4") {
  auto rep = run_suzuki_suite(4);
  bool hom = false, ovoid = false, order = false;
  for (const auto& c : rep.checks) {
    if (c.id == "subfield-embedding-hom") hom = c.pass;
    if (c.id == "subfield-ovoid-preserved") ovoid = c.pass;
    if (c.id == "subfield-order") order = c.pass;
  }
  REQUIRE(hom);
  REQUIRE(ovoid);
  REQUIRE(order);
  REQUIRE(rep.pass);
}
