// Copyright 2026 gqx contributors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "gqx/permgroup.hpp"
#include "gqx/suzuki.hpp"

using namespace gqx;

TEST_CASE("orbit with Schreier vector") {
  // identity-only: singleton orbit
  std::vector<Perm> id_only{Perm(5)};
  auto od = orbit(id_only, 2, 5);
  REQUIRE(od.orbit == std::vector<Pt>{2});

  // n-cycle: full domain, transporter reconstructs correctly
  Perm cyc = Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}});
  std::vector<Perm> gens{cyc};
  auto od2 = orbit(gens, 3, 7);
  REQUIRE(od2.orbit.size() == 7);
  for (Pt target = 0; target < 7; ++target) {
    Perm t = transporter(od2, gens, target);
    REQUIRE(t[3] == target);
  }
}

TEST_CASE("symmetric group on 4 points has order 24") {
  std::vector<Perm> gens{Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{0, 1, 2, 3}})};
  PermGroup s4(4, gens);
  REQUIRE(s4.order() == 24);
  std::set<std::string> all;
  s4.for_each_element([&](const Perm& p) { all.insert(p.text()); });
  REQUIRE(all.size() == 24);
}

TEST_CASE("dihedral and cyclic sanity") {
  Perm r = Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}});
  std::vector<Pt> neg(7);
  for (Pt i = 0; i < 7; ++i) neg[i] = (7 - i) % 7;
  PermGroup d7(7, {r, Perm(neg)});
  REQUIRE(d7.order() == 14);
  PermGroup c7(7, {r});
  REQUIRE(c7.order() == 7);
}

TEST_CASE("membership by sifting") {
  std::vector<Perm> gens{Perm::from_cycles(5, {{0, 1, 2, 3, 4}}), Perm::from_cycles(5, {{0, 1, 2}})};
  PermGroup a5ish(5, gens);  // these generate A5
  REQUIRE(a5ish.order() == 60);
  REQUIRE(a5ish.contains(Perm::from_cycles(5, {{1, 2, 3}})));
  REQUIRE_FALSE(a5ish.contains(Perm::from_cycles(5, {{0, 1}})));
  // a product of generators is always a member
  Perm prod = gens[0] * gens[1] * gens[0].inverse() * gens[1];
  REQUIRE(a5ish.contains(prod));
  // degree mismatch is an error
  REQUIRE_THROWS_AS(a5ish.contains(Perm(6)), invalid_argument_error);
}

TEST_CASE("element order via cycle structure") {
  Perm p = Perm::from_cycles(7, {{0, 1, 2, 3}, {4, 5, 6}});
  REQUIRE(p.order() == 12);
  REQUIRE(Perm(9).order() == 1);
}

TEST_CASE("Sz(8): natural orbit and certified order") {
  SuzukiGroup sz(1);
  REQUIRE(sz.q() == 8);
  REQUIRE(sz.degree() == 65);
  auto od = sz.group().point_orbit(0);
  REQUIRE(od.orbit.size() == 65);
  REQUIRE(sz.group().order() == 29120);
  REQUIRE(sz.order_formula() == 29120);
  // chain/orbit consistency
  Bigint prod = 1;
  for (auto s : sz.group().fundamental_orbit_sizes()) prod *= s;
  REQUIRE(prod == sz.group().order());
  // all generators sift to identity
  for (const Perm& g : sz.group().generators()) REQUIRE(sz.group().contains(g));
  // a transposition is not an element of Sz(8)
  REQUIRE_FALSE(sz.group().contains(Perm::from_cycles(65, {{0, 1}})));
}

TEST_CASE("base image reconstruction") {
  SuzukiGroup sz(1);
  const PermGroup& g = sz.group();
  auto stream = g.random_stream(7);
  for (int i = 0; i < 20; ++i) {
    Perm x = stream.next();
    Perm y = g.element_from_base_images(g.base_images(x));
    REQUIRE(x == y);
  }
}

TEST_CASE("random streams are reproducible") {
  SuzukiGroup sz(1);
  auto s1 = sz.group().random_stream(42);
  auto s2 = sz.group().random_stream(42);
  for (int i = 0; i < 10; ++i) REQUIRE(s1.next() == s2.next());
}

TEST_CASE("order target construction agrees with the certified chain") {
  SuzukiGroup sz(1);
  PermGroup g(sz.degree(), sz.group().generators());
  g.build_with_order_target(Bigint(29120));
  REQUIRE(g.order() == 29120);
}

TEST_CASE("Sz(32): order 32537600") {
  SuzukiGroup sz(2);
  REQUIRE(sz.degree() == 1025);
  REQUIRE(sz.group().order() == Bigint(32537600));
  REQUIRE(sz.order_formula() == Bigint(32537600));
}

TEST_CASE("group fixture round trip") {
  SuzukiGroup sz(1);
  std::ostringstream os;
  write_group_fixture(os, sz.group());
  std::istringstream is(os.str());
  PermGroup back = read_group_fixture(is);
  REQUIRE(back.degree() == 65);
  REQUIRE(back.order() == 29120);
  REQUIRE_THROWS_AS(
      [] {
        std::istringstream bad("notdegree 5\n");
        return read_group_fixture(bad);
      }(),
      invalid_argument_error);
}
