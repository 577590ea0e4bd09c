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
#ifndef GQX_VERIFIER_HPP_
#define GQX_VERIFIER_HPP_

#include <json.hpp>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "gqx/action.hpp"
#include "gqx/exponents.hpp"
#include "gqx/groupzoo.hpp"
#include "gqx/quadrangle.hpp"
#include "gqx/ree.hpp"
#include "gqx/suzuki.hpp"

namespace gqx {

using Json = nlohmann::ordered_json;

enum class Family { Suzuki, Ree };

inline const char* family_name(Family f) { return f == Family::Suzuki ? "sz" : "ree"; }

/// One verified statement: an identifier, the check it traces back to, the
/// expected and observed values as decimal strings, and the verdict.
struct CheckRecord {
  std::string id;
  std::string anchor;
  std::string expected;
  std::string observed;
  bool pass = false;
  std::string note;
};

inline Json to_json(const CheckRecord& c) {
  Json j;
  j["id"] = c.id;
  j["anchor"] = c.anchor;
  j["expected"] = c.expected;
  j["observed"] = c.observed;
  j["pass"] = c.pass;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

template <typename T>
std::string dec(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

inline CheckRecord check_eq(std::string id, std::string anchor, const Bigint& expected,
                            const Bigint& observed, std::string note = {}) {
  CheckRecord c{std::move(id), std::move(anchor), dec(expected), dec(observed),
                expected == observed, std::move(note)};
  return c;
}

inline CheckRecord check_true(std::string id, std::string anchor, bool ok, std::string note = {}) {
  CheckRecord c{std::move(id), std::move(anchor), "true", ok ? "true" : "false", ok,
                std::move(note)};
  return c;
}

// ---- exclusion (the arithmetic replay of the nonexistence argument) ---------

struct KindExponent {
  std::string kind;
  unsigned exponent = 0;
};

struct ExclusionPair {
  std::string point_kind, line_kind;
  unsigned a = 0, b = 0;
  std::vector<GQOrder> solutions;
  bool excluded = false;  // no thick-compatible solutions
};

struct ExclusionEntry {
  unsigned m = 0;
  Bigint q;
  std::vector<KindExponent> kinds;
  std::vector<unsigned> exponent_set;
  std::vector<ExclusionPair> pairs;
  bool excluded = false;
};

struct ExclusionReport {
  Family family;
  unsigned m_min = 0, m_max = 0;
  std::vector<ExclusionEntry> entries;
  bool excluded = false;
};

/// Non-parabolic stabilizer kinds with their fixed-set exponents
/// (|fixed set| = p^a).
inline std::vector<KindExponent> exclusion_kinds(Family fam, unsigned m) {
  std::vector<KindExponent> out;
  if (fam == Family::Suzuki) {
    out.push_back({"dihedral", 4 * m + 1});
    out.push_back({"frobenius-plus", 4 * m});
    out.push_back({"frobenius-minus", 4 * m});
  } else {
    out.push_back({"involution-centralizer", 2 * m + 1});
    out.push_back({"four-group-normalizer", 4 * m + 1});
    out.push_back({"frobenius-plus", 4 * m + 1});
    out.push_back({"frobenius-minus", 4 * m + 1});
  }
  for (auto [n0, r0] : subfield_decompositions(2 * m + 1)) {
    std::ostringstream os;
    os << "subfield(" << n0 << "," << r0 << ")";
    out.push_back({os.str(), 2 * n0 * (r0 - 1)});
  }
  return out;
}

/// Replays the exclusion for one family over a range of m: the parabolic is
/// ruled out by 2-transitivity, and every remaining pair of stabilizer kinds
/// leads to point/line counts p^a, p^b whose parameter equations have no
/// thick solution.
inline ExclusionReport run_exclusion(Family fam, unsigned m_min, unsigned m_max) {
  if (m_min < 1 || m_max < m_min) throw invalid_argument_error("run_exclusion: need 1 <= m_min <= m_max");
  ExclusionReport rep;
  rep.family = fam;
  rep.m_min = m_min;
  rep.m_max = m_max;
  rep.excluded = true;
  unsigned p = fam == Family::Suzuki ? 2 : 3;
  for (unsigned m = m_min; m <= m_max; ++m) {
    ExclusionEntry e;
    e.m = m;
    Bigint q = 1;
    for (unsigned i = 0; i < 2 * m + 1; ++i) q *= p;
    e.q = q;
    e.kinds = exclusion_kinds(fam, m);
    auto exps = fam == Family::Suzuki ? exponent_set_suzuki(m) : exponent_set_ree(m);
    e.exponent_set.assign(exps.begin(), exps.end());
    e.excluded = true;
    for (const auto& pk : e.kinds)
      for (const auto& lk : e.kinds) {
        ExclusionPair pair;
        pair.point_kind = pk.kind;
        pair.line_kind = lk.kind;
        pair.a = pk.exponent;
        pair.b = lk.exponent;
        pair.solutions = prime_power_gq_solve(p, pair.a, pair.b);
        pair.excluded = true;
        for (const auto& sol : pair.solutions)
          if (sol.thick()) pair.excluded = false;
        e.excluded = e.excluded && pair.excluded;
        e.pairs.push_back(std::move(pair));
      }
    rep.excluded = rep.excluded && e.excluded;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

inline Json to_json(const ExclusionReport& rep) {
  Json j;
  j["family"] = family_name(rep.family);
  j["m-min"] = dec(rep.m_min);
  j["m-max"] = dec(rep.m_max);
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    Json je;
    je["m"] = dec(e.m);
    je["q"] = dec(e.q);
    je["parabolic"] = {
        {"kind", "parabolic"},
        {"excluded-by", "two-transitive natural action maps collinear pairs anywhere"},
        {"anchor", "two-transitivity"}};
    Json kinds = Json::array();
    for (const auto& k : e.kinds) kinds.push_back({{"kind", k.kind}, {"exponent", dec(k.exponent)}});
    je["kinds"] = kinds;
    Json exps = Json::array();
    for (unsigned a : e.exponent_set) exps.push_back(dec(a));
    je["exponent-set"] = exps;
    Json pairs = Json::array();
    for (const auto& p2 : e.pairs) {
      Json jp;
      jp["point-kind"] = p2.point_kind;
      jp["line-kind"] = p2.line_kind;
      jp["a"] = dec(p2.a);
      jp["b"] = dec(p2.b);
      Json sols = Json::array();
      for (const auto& s : p2.solutions) sols.push_back({{"s", dec(s.s)}, {"t", dec(s.t)}});
      jp["solutions"] = sols;
      jp["excluded"] = p2.excluded;
      jp["anchor"] = "prime-power-solver";
      pairs.push_back(std::move(jp));
    }
    je["pairs"] = pairs;
    je["verdict"] = e.excluded ? "excluded" : "NOT-EXCLUDED";
    entries.push_back(std::move(je));
  }
  j["entries"] = entries;
  j["verdict"] = rep.excluded ? "excluded" : "NOT-EXCLUDED";
  return j;
}

// ---- structural suites -------------------------------------------------------

struct SuiteReport {
  Family family;
  unsigned m = 0;
  bool extended = false;
  std::vector<CheckRecord> checks;
  bool pass = true;

  void add(CheckRecord c) {
    pass = pass && c.pass;
    checks.push_back(std::move(c));
  }
};

inline Json to_json(const SuiteReport& rep) {
  Json j;
  j["family"] = family_name(rep.family);
  j["m"] = dec(rep.m);
  j["extended"] = rep.extended;
  Json checks = Json::array();
  for (const auto& c : rep.checks) checks.push_back(to_json(c));
  j["checks"] = checks;
  j["verdict"] = rep.pass ? "pass" : "FAIL";
  return j;
}

/// The full Suzuki lemma suite at desk scale (m <= 2).  For larger m only
/// the arithmetic and, for composite 2m+1, the subfield embedding are run;
/// enumeration items are reported as resource-capped.
inline SuiteReport run_suzuki_suite(unsigned m) {
  SuiteReport rep;
  rep.family = Family::Suzuki;
  rep.m = m;
  {
    auto exps = exponent_set_suzuki(m);
    std::ostringstream os;
    for (unsigned a : exps) os << a << " ";
    rep.add(check_true("exponent-set", "fixed-point-exponents", !exps.empty(), os.str()));
  }
  if (m > 2) {
    rep.add(check_true("enumeration", "resource-cap", true,
                       "group enumeration beyond desk scale at this m; formula-level only"));
    for (auto [n0, r0] : subfield_decompositions(2 * m + 1)) {
      if (2 * m + 1 > 9) {
        rep.add(check_true("subfield-embedding", "subfield", true, "beyond matrix desk scale"));
        continue;
      }
      auto sub = sz_subfield_check(m, n0, r0);
      rep.add(check_true("subfield-embedding-hom", "subfield", sub.embedding_is_hom));
      rep.add(check_true("subfield-ovoid-preserved", "subfield", sub.ovoid_preserved));
      rep.add(check_true("subfield-order", "subfield", sub.order_matches, dec(sub.small_order)));
      rep.add(check_true("subfield-sylow-centralizer-bound", "subfield",
                         sub.sylow_centralizer_bound,
                         "embedded involution is central in the q^2 unipotent sheet"));
    }
    return rep;
  }

  SuzukiGroup g(m);
  Bigint q = g.q();
  rep.add(check_eq("group-order", "order-formula", g.order_formula(), g.group().order()));
  rep.add(check_eq("point-stabilizer-order", "parabolic-shape", q * q * (q - 1),
                   PermGroup(g.degree(), sz_maximal_subgroup(g, SzKind::Parabolic)).order()));
  rep.add(check_true("natural-two-transitive", "two-transitivity",
                     is_two_transitive(GroupAction::natural(g.group()))));

  auto inv = sz_verify_involution_classes(g);
  rep.add(check_eq("involution-class-size", "involution-class",
                   Bigint(g.degree()) * (q - 1), Bigint(inv.class_size)));
  rep.add(check_true("involution-single-class", "involution-class", inv.single_class));
  rep.add(check_eq("involution-centralizer", "centralizer-of-involution", q * q,
                   inv.centralizer_order));

  for (SzKind kind : {SzKind::Dihedral, SzKind::FrobeniusPlus, SzKind::FrobeniusMinus}) {
    std::string kn = sz_kind_name(kind);
    auto gens = sz_maximal_subgroup(g, kind);
    PermGroup h(g.degree(), gens);
    rep.add(check_eq("subgroup-order:" + kn, "maximal-subgroups", sz_subgroup_order(g, kind),
                     h.order()));
    auto cls = order_n_classes(h, 2, 1u << 21);
    rep.add(check_eq("involution-classes-in:" + kn, "involution-class", 1, cls.size()));
    Bigint expect_c = kind == SzKind::Dihedral ? 2 : 4;
    rep.add(check_eq("involution-centralizer-in:" + kn, "centralizer-of-involution", expect_c,
                     cls.empty() ? 0 : cls[0].centralizer_order));
    auto prof = sz_fixed_point_profile(g, kind);
    rep.add(check_eq("coset-degree:" + kn, "coset-action",
                     g.group().order() / sz_subgroup_order(g, kind), Bigint(prof.degree)));
    rep.add(check_eq("fixed-points:" + kn, "fixed-point-count", prof.expected,
                     Bigint(prof.observed)));
    rep.add(check_eq("fixed-point-formula:" + kn, "fixed-point-formula", prof.expected,
                     Bigint(prof.formula_value)));
    rep.add(check_true("centralizer-transitive:" + kn, "centralizer-transitivity",
                       prof.transitive && prof.index_identity));
    rep.add(check_true("class-fusion:" + kn, "class-fusion", prof.fusion));
  }
  if (m == 1) {
    GroupAction dact =
        GroupAction::cosets(g.group(), sz_maximal_subgroup(g, SzKind::Dihedral), Bigint(14));
    rep.add(check_true("coset-action-not-two-transitive", "two-transitivity",
                       !is_two_transitive(dact)));
    // shared-element step: conjugate one stabilizer so both contain the same
    // involution, with an explicit witness
    auto ha = sz_maximal_subgroup(g, SzKind::Dihedral);
    auto hl = sz_maximal_subgroup(g, SzKind::FrobeniusPlus);
    PermGroup hag(g.degree(), ha), hlg(g.degree(), hl);
    Perm ga, gl;
    bool fa = false, fl = false;
    hag.for_each_element([&](const Perm& p) {
      if (!fa && p.order() == 2) { ga = p; fa = true; }
    });
    hlg.for_each_element([&](const Perm& p) {
      if (!fl && p.order() == 2) { gl = p; fl = true; }
    });
    ConjClass cls(g.group(), ga);
    auto idx = cls.find(gl);
    bool ok = idx.has_value();
    if (ok) {
      Perm k = cls.witness(*idx);  // ga^k = gl
      ok = ga.conjugate_by(k) == gl;
    }
    rep.add(check_true("shared-involution-conjugator", "shared-element-step", ok,
                       "explicit witness conjugating one involution onto the other"));
  }
  return rep;
}

/// The full Ree lemma suite at m = 1 (desk scale).
inline SuiteReport run_ree_suite(unsigned m, bool extended) {
  SuiteReport rep;
  rep.family = Family::Ree;
  rep.m = m;
  rep.extended = extended;
  {
    auto exps = exponent_set_ree(m);
    std::ostringstream os;
    for (unsigned a : exps) os << a << " ";
    rep.add(check_true("exponent-set", "fixed-point-exponents", !exps.empty(), os.str()));
  }
  if (m != 1) {
    rep.add(check_true("enumeration", "resource-cap", true,
                       "natural degree q^3+1 beyond desk scale at this m; formula-level only"));
    return rep;
  }

  ReeGroup g(1);
  unsigned q = g.q();
  Bigint bq = q;
  rep.add(check_eq("group-order", "order-formula", g.order_formula(), g.group().order()));
  rep.add(check_eq("point-stabilizer-order", "parabolic-shape", bq * bq * bq * (bq - 1),
                   g.group().order() / g.degree()));
  rep.add(check_true("natural-two-transitive", "two-transitivity",
                     is_two_transitive(GroupAction::natural(g.group()))));

  ReeSurveyWitnesses w;
  auto survey = ree_order3_survey(g, extended, &w);
  rep.add(check_eq("real-class-size", "order-three-classes", 511784, Bigint(survey.real_size)));
  rep.add(check_eq("real-centralizer", "centralizer-of-order-three", bq * bq * bq,
                   survey.real_centralizer));
  rep.add(check_true("real-flag", "real-elements", survey.real_flag));
  rep.add(check_true("real-sylow-witness", "centralizer-of-order-three", survey.sylow_witness,
                     "a Sylow 3-subgroup of order q^3 centralizes the representative"));
  rep.add(check_eq("involution-class-size", "involution-centralizer",
                   g.group().order() / (bq * (bq * bq - 1)), Bigint(survey.involution_class_size)));
  rep.add(check_eq("involution-centralizer-order", "involution-centralizer", bq * (bq * bq - 1),
                   survey.involution_centralizer));
  rep.add(check_true("nonreal-commutes-with-involution", "real-elements",
                     survey.nonreal_commutes_with_involution));
  rep.add(check_true("nonreal-outside-real-class", "order-three-classes",
                     survey.nonreal_outside_real_class));
  rep.add(check_eq("nonreal-centralizer-constructive", "centralizer-of-order-three",
                   Bigint(2) * q * q, survey.nonreal_constructive_centralizer,
                   "certified subgroup of the centralizer reaching the reference order"));
  if (extended) {
    rep.add(check_eq("nonreal-class-size", "order-three-classes",
                     g.group().order() / (Bigint(2) * q * q), Bigint(survey.nonreal_class_size)));
    rep.add(check_eq("nonreal-inverse-class-size", "order-three-classes",
                     g.group().order() / (Bigint(2) * q * q),
                     Bigint(survey.nonreal_inverse_class_size)));
    rep.add(check_true("nonreal-flag-exact", "real-elements", survey.nonreal_flag_exact));
    rep.add(check_true("mutual-inversion", "order-three-classes", survey.mutual_inversion));
    rep.add(check_true("exactly-three-classes", "order-three-classes",
                       survey.exactly_three_classes, "Sylow coverage"));
  } else {
    rep.add(check_true("nonreal-exact-tier", "order-three-classes", true,
                       "exact class sizes and the class count run in the extended tier"));
  }

  // abstract models of the non-parabolic kinds
  struct ModelSpec {
    ReeKind kind;
    Bigint order;
    Bigint centralizer3;
  };
  std::vector<ModelSpec> models = {
      {ReeKind::InvolutionCentralizer, ree_subgroup_order(q, 1, ReeKind::InvolutionCentralizer),
       Bigint(2) * q},
      {ReeKind::FourGroupNormalizer, ree_subgroup_order(q, 1, ReeKind::FourGroupNormalizer), 6},
      {ReeKind::FrobeniusPlus, ree_subgroup_order(q, 1, ReeKind::FrobeniusPlus), 6},
      {ReeKind::FrobeniusMinus, ree_subgroup_order(q, 1, ReeKind::FrobeniusMinus), 6},
  };
  for (const auto& spec : models) {
    std::string kn = ree_kind_name(spec.kind);
    Recipe recipe = ree_model_recipe(q, 1, spec.kind);
    PermGroup h = realize(recipe);
    rep.add(check_eq("model-order:" + kn, "maximal-subgroups", spec.order, h.order(),
                     recipe_text(recipe).substr(0, 60)));
    auto o3 = order_n_classes(h, 3, 1u << 21);
    rep.add(check_eq("model-order3-classes:" + kn, "order-three-classes", 2, o3.size()));
    bool cent_ok = !o3.empty(), real_ok = true, inv_ok = true;
    std::vector<Perm> invs;
    h.for_each_element([&](const Perm& p) {
      if (p.order() == 2) invs.push_back(p);
    });
    for (const auto& c : o3) {
      cent_ok = cent_ok && c.centralizer_order == spec.centralizer3;
      real_ok = real_ok && !c.real;
      bool commutes = false;
      for (const Perm& i : invs)
        if (c.representative * i == i * c.representative) commutes = true;
      inv_ok = inv_ok && commutes;
    }
    rep.add(check_eq("model-order3-centralizer:" + kn, "centralizer-of-order-three",
                     spec.centralizer3, cent_ok ? spec.centralizer3 : 0));
    rep.add(check_true("model-order3-nonreal:" + kn, "real-elements", real_ok));
    rep.add(check_true("model-order3-centralizes-involution:" + kn, "real-elements", inv_ok));
    if (spec.kind == ReeKind::FourGroupNormalizer) {
      auto census = involution_census(h, 1u << 21);
      rep.add(check_eq("model-involutions:" + kn, "involution-count", q + 4,
                       Bigint(census.count)));
    }
  }
  {
    // negative control: the trivial dihedral action must fail the
    // centralizer-order-6 check
    PermGroup bad = realize(four_group_dihedral_recipe((q + 1) / 4, false));
    auto o3 = order_n_classes(bad, 3, 1u << 21);
    bool any6 = false;
    for (const auto& c : o3) any6 = any6 || c.centralizer_order == 6;
    rep.add(check_true("negative-control-trivial-action", "order-three-classes", !any6,
                       "trivial dihedral action rejected, centralizer order departs from 6"));
  }

  // fixed-point profiles
  auto prof = ree_fixed_point_profile(g, ReeKind::InvolutionCentralizer, w);
  rep.add(check_eq("coset-degree:involution-centralizer", "coset-action",
                   g.group().order() / ree_subgroup_order(q, 1, ReeKind::InvolutionCentralizer),
                   Bigint(prof.degree)));
  rep.add(check_eq("fixed-points:involution-centralizer", "fixed-point-count", q,
                   Bigint(prof.observed)));
  rep.add(check_true("fixed-point-formula:involution-centralizer", "fixed-point-formula",
                     prof.formula_consistent));
  rep.add(check_true("centralizer-transitive:involution-centralizer",
                     "centralizer-transitivity", prof.transitive && prof.index_identity));
  for (ReeKind kind :
       {ReeKind::FourGroupNormalizer, ReeKind::FrobeniusPlus, ReeKind::FrobeniusMinus}) {
    auto p2 = ree_fixed_point_profile(g, kind, w);
    rep.add(check_true(std::string("fixed-point-formula:") + ree_kind_name(kind),
                       "fixed-point-formula", p2.formula_only && p2.formula_consistent,
                       "coset action beyond desk scale; formula-level verification"));
  }
  return rep;
}

// ---- top-level report assembly ---------------------------------------------

inline Json report_header(const std::string& command) {
  Json j;
  j["schema"] = "gqx-report/1";
  j["command"] = command;
  j["config"] = {{"seed", dec(config().seed)},
                 {"memory-cap", dec(config().memory_cap_bytes)},
                 {"threads", dec(config().threads)}};
  j["provenance"] = {
      {"socle-reduction",
       "the reduction from an almost simple group to its socle is assumed, not re-verified"},
      {"shared-element-step",
       "conjugating a line stabilizer so that both stabilizers share the distinguished element "
       "is recorded as a justified step; witnessed explicitly at q = 8"},
      {"formula-only-kinds",
       "coset actions beyond desk scale are verified at formula level with model fusion checks"}};
  return j;
}

}  // namespace gqx

#endif  // GQX_VERIFIER_HPP_
