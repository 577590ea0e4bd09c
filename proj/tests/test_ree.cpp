// Copyright 2026 gqx contributors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include <catch2/catch_amalgamated.hpp>

#include "gqx/ree.hpp"

using namespace gqx;

TEST_CASE("R(3): degree 28, order 1512") {
  // m = 0 is below the simple range but exercises the whole construction
  ReeGroup r(0);
  REQUIRE(r.q() == 3);
  REQUIRE(r.degree() == 28);
  REQUIRE(r.group().order() == 1512);
  REQUIRE(r.order_formula() == 1512);
}

TEST_CASE("R(3): unipotent orders") {
  ReeGroup r(0);
  REQUIRE(r.perm_of_matrix(r.unipotent(1, 0, 0)).order() == 9);
  REQUIRE(r.perm_of_matrix(r.unipotent(0, 1, 0)).order() == 3);
  REQUIRE(r.perm_of_matrix(r.unipotent(0, 0, 1)).order() == 3);
}

TEST_CASE("R(3): unipotent family is closed and centre is u(0,0,*)") {
  ReeGroup r(0);
  const Field& f = *r.field();
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b)
      for (unsigned c = 0; c < 3; ++c) {
        auto u = r.unipotent(a, b, c);
        auto v = r.unipotent(1, 2, 1);
        auto uv = mat_mul(f, u, v);
        // the product must land back in the family: search the 27 params
        bool found = false;
        for (unsigned x = 0; x < 3 && !found; ++x)
          for (unsigned y = 0; y < 3 && !found; ++y)
            for (unsigned z = 0; z < 3 && !found; ++z)
              if (r.unipotent(x, y, z).a == uv.a) found = true;
        REQUIRE(found);
      }
  // centre
  auto z = r.unipotent(0, 0, 2);
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b) {
      auto u = r.unipotent(a, b, 1);
      REQUIRE(mat_mul(f, z, u).a == mat_mul(f, u, z).a);
    }
}

TEST_CASE("R(27): degree and generator actions", "[ree27]") {
  ReeGroup r(1);
  REQUIRE(r.q() == 27);
  REQUIRE(r.degree() == 19684);
  // point 0 is fixed by the unipotents and the torus, moved by the Weyl
  const auto& gens = r.group().generators();
  REQUIRE(gens[0][0] == 0);
  REQUIRE(gens[3][0] == 0);
  REQUIRE(gens[4][0] != 0);
}

TEST_CASE("R(27): certified order", "[ree27][heavy]") {
  ReeGroup r(1);
  REQUIRE(r.group().order() == Bigint("10073444472"));
  REQUIRE(r.order_formula() == Bigint("10073444472"));
}

TEST_CASE("R(3): order-3 survey exercises every code path") {
  ReeGroup g(0);
  ReeSurveyWitnesses w;
  auto rep = ree_order3_survey(g, true, &w);
  // |G| = 1512, q = 3: real class 1512/27 = 56, involutions 1512/24 = 63
  REQUIRE(rep.real_size == 56);
  REQUIRE(rep.real_centralizer == 27);
  REQUIRE(rep.real_flag);
  REQUIRE(rep.sylow_witness);
  REQUIRE(rep.involution_class_size == 63);
  REQUIRE(rep.involution_centralizer == 24);
  REQUIRE(rep.nonreal_found);
  REQUIRE(rep.nonreal_commutes_with_involution);
  REQUIRE(rep.nonreal_outside_real_class);
  REQUIRE(rep.nonreal_constructive_centralizer == 18);
  REQUIRE(rep.extended_ran);
  REQUIRE(rep.nonreal_class_size == 1512 / 18);
  REQUIRE(rep.nonreal_inverse_class_size == rep.nonreal_class_size);
  REQUIRE(rep.nonreal_flag_exact);
  REQUIRE(rep.mutual_inversion);
  REQUIRE(rep.exactly_three_classes);
}

TEST_CASE("R(3): fixed point profile of the involution-centralizer kind") {
  ReeGroup g(0);
  ReeSurveyWitnesses w;
  ree_order3_survey(g, false, &w);
  auto prof = ree_fixed_point_profile(g, ReeKind::InvolutionCentralizer, w);
  REQUIRE(prof.degree == 63);
  REQUIRE(prof.expected == 3);
  REQUIRE(prof.observed == 3);
  REQUIRE(prof.formula_consistent);
  REQUIRE(prof.transitive);
  REQUIRE(prof.index_identity);
}

TEST_CASE("R(27): order-3 survey default tier", "[ree27][heavy]") {
  ReeGroup g(1);
  g.group().build_with_order_target(Bigint("10073444472"));
  ReeSurveyWitnesses w;
  auto rep = ree_order3_survey(g, false, &w);
  REQUIRE(rep.real_size == 511784);
  REQUIRE(rep.real_centralizer == 19683);
  REQUIRE(rep.real_flag);
  REQUIRE(rep.sylow_witness);
  REQUIRE(rep.involution_class_size == 512487);
  REQUIRE(rep.involution_centralizer == 19656);
  REQUIRE(rep.nonreal_constructive_centralizer == 1458);
  REQUIRE(w.involution_centralizer.order() == 19656);
}
