// Copyright 2026 gqx contributors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "gqx/quadrangle.hpp"

using namespace gqx;

namespace {

IncidenceStructure grid(Pt rows, Pt cols) {
  // rows*cols points; rows+cols lines (every row, every column)
  IncidenceStructure s;
  s.num_points = rows * cols;
  s.num_lines = rows + cols;
  for (Pt r = 0; r < rows; ++r)
    for (Pt c = 0; c < cols; ++c) {
      s.incidences.emplace_back(r * cols + c, r);
      s.incidences.emplace_back(r * cols + c, rows + c);
    }
  s.normalize();
  return s;
}

}  // namespace

TEST_CASE("W(2): the generalized quadrangle of order (2,2)") {
  IncidenceStructure s = w_q(2);
  REQUIRE(s.num_points == 15);
  REQUIRE(s.num_lines == 15);
  auto res = gq_check(s);
  REQUIRE(res.order.has_value());
  REQUIRE(res.order->s == 2);
  REQUIRE(res.order->t == 2);
  REQUIRE_FALSE(res.thin);
}

TEST_CASE("W(3): order (3,3), 40 points and 40 lines") {
  IncidenceStructure s = w_q(3);
  REQUIRE(s.num_points == 40);
  REQUIRE(s.num_lines == 40);
  auto res = gq_check(s);
  REQUIRE(res.order.has_value());
  REQUIRE((res.order->s == 3 && res.order->t == 3));
  // count identities
  REQUIRE(s.num_points == (3 + 1) * (3 * 3 + 1));
  REQUIRE(s.num_lines == (3 + 1) * (3 * 3 + 1));
}

TEST_CASE("4x4 grid is a thin GQ of order (3,1)") {
  auto res = gq_check(grid(4, 4));
  REQUIRE(res.order.has_value());
  REQUIRE(res.order->s == 3);
  REQUIRE(res.order->t == 1);
  REQUIRE(res.thin);
}

TEST_CASE("mutated fixtures fail with the right diagnosis") {
  IncidenceStructure s = w_q(2);
  // delete one incidence pair: regularity breaks
  IncidenceStructure broken = s;
  broken.incidences.pop_back();
  auto res = gq_check(broken);
  REQUIRE_FALSE(res.order.has_value());
  REQUIRE((res.failure == GqFailure::PointsNotRegular || res.failure == GqFailure::LinesNotRegular));

  // empty structure
  IncidenceStructure empty;
  REQUIRE(gq_check(empty).failure == GqFailure::Empty);

  // a projective-plane-like structure is not a GQ (wrong diameter/girth):
  // Fano plane
  IncidenceStructure fano;
  fano.num_points = 7;
  fano.num_lines = 7;
  int L[7][3] = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  for (Pt l = 0; l < 7; ++l)
    for (int j = 0; j < 3; ++j) fano.incidences.emplace_back(L[l][j], l);
  fano.normalize();
  auto fres = gq_check(fano);
  REQUIRE_FALSE(fres.order.has_value());
  REQUIRE((fres.failure == GqFailure::WrongDiameter || fres.failure == GqFailure::WrongGirth));
}

TEST_CASE("duality is involutive and swaps parameters") {
  IncidenceStructure g = grid(4, 4);
  IncidenceStructure d = dual(g);
  auto res = gq_check(d);
  REQUIRE(res.order.has_value());
  REQUIRE(res.order->s == 1);
  REQUIRE(res.order->t == 3);
  IncidenceStructure dd = dual(d);
  REQUIRE(dd.num_points == g.num_points);
  REQUIRE(dd.num_lines == g.num_lines);
  REQUIRE(dd.incidences == g.incidences);
  auto w2 = gq_check(dual(w_q(2)));
  REQUIRE(w2.order.has_value());
  REQUIRE((w2.order->s == 2 && w2.order->t == 2));
}

TEST_CASE("fixed substructures") {
  IncidenceStructure s = w_q(2);
  // identity automorphism fixes everything
  GqAutomorphism id{Perm(15), Perm(15)};
  auto f = fixed_substructure(s, id);
  REQUIRE(f.points.size() == 15);
  REQUIRE(f.lines.size() == 15);
  auto sub = sub_gq_check(f, true, true);
  REQUIRE(sub.status == SubGqResult::Status::Gq);
  REQUIRE((sub.order->s == 2 && sub.order->t == 2));
  // too-small fixed sets are a hypothesis error, not a falsification
  FixedSubstructure tiny;
  tiny.points = {0};
  tiny.lines = {0, 1};
  REQUIRE(sub_gq_check(tiny, true, true).status == SubGqResult::Status::HypothesisUnmet);
  // a non-automorphism is rejected
  GqAutomorphism bad{Perm::from_cycles(15, {{0, 1}}), Perm(15)};
  REQUIRE_THROWS_AS(fixed_substructure(s, bad), invalid_argument_error);
}

TEST_CASE("prime power solver: spot values") {
  auto r1 = prime_power_gq_solve(2, 4, 3);
  REQUIRE(r1.size() == 1);
  REQUIRE((r1[0].s == 3 && r1[0].t == 1));
  auto r2 = prime_power_gq_solve(2, 2, 2);
  REQUIRE(r2.size() == 1);
  REQUIRE((r2[0].s == 1 && r2[0].t == 1));
  for (unsigned a = 1; a <= 20; ++a)
    for (unsigned b = 1; b <= 20; ++b) REQUIRE(prime_power_gq_solve(3, a, b).empty());
}

TEST_CASE("characterization equals the oracle for p in {2,3,5}, a,b <= 20") {
  for (std::uint64_t p : {2ull, 3ull, 5ull})
    for (unsigned a = 1; a <= 20; ++a)
      for (unsigned b = 1; b <= 20; ++b) {
        auto o = prime_power_gq_solve_oracle(p, a, b);
        auto c = prime_power_gq_solve_characterization(p, a, b);
        REQUIRE(o.size() == c.size());
        for (std::size_t i = 0; i < o.size(); ++i) REQUIRE(o[i] == c[i]);
        // p = 2 solutions are always thin
        for (const auto& sol : o) REQUIRE((sol.s == 1 || sol.t == 1));
      }
}

TEST_CASE("(s+1)(st+1) is never prime for s,t >= 2") {
  auto is_prime = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (std::uint64_t s = 2; s <= 100; ++s)
    for (std::uint64_t t = 2; t <= 100; ++t) REQUIRE_FALSE(is_prime((s + 1) * (s * t + 1)));
}

TEST_CASE("incidence file round trip") {
  IncidenceStructure s = grid(3, 4);
  std::ostringstream os;
  write_incidence(os, s);
  std::istringstream is(os.str());
  IncidenceStructure back = read_incidence(is);
  REQUIRE(back.num_points == s.num_points);
  REQUIRE(back.num_lines == s.num_lines);
  REQUIRE(back.incidences == s.incidences);
}
