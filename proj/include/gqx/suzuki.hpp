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
#ifndef GQX_SUZUKI_HPP_
#define GQX_SUZUKI_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gqx/field.hpp"
#include "gqx/matrix.hpp"
#include "gqx/permgroup.hpp"

namespace gqx {

/// Sz(q), q = 2^(2m+1), acting on its ovoid in PG(3,q).
///
/// The ovoid consists of the distinguished point at infinity together with
/// the affine sheet P(a,b) = (1 : a : b : f(a,b)) where
/// f(a,b) = a^(s+2) + ab + b^s and s = 2^(m+1) is the Tits exponent.  The
/// group is generated by the two-parameter lower unitriangular family
/// x(a,b), the diagonal torus d(kappa) with weights (2^m+1, 2^m, -2^m,
/// -(2^m+1)), and the antidiagonal involution.  Point 0 is infinity; the
/// affine points follow in lexicographic (a,b) order of field encodings.
class SuzukiGroup {
 public:
  explicit SuzukiGroup(unsigned m) : m_(m) {
    if (m < 1) throw invalid_argument_error("SuzukiGroup: m >= 1 required");
    if (2 * m + 1 > 9) throw invalid_argument_error("SuzukiGroup: degree budget exceeded (2m+1 > 9)");
    field_ = Field::make(2, 2 * m + 1);
    q_ = field_->size();
    sigma_ = 1u << (m + 1);
    build();
  }

  unsigned m() const { return m_; }
  unsigned q() const { return q_; }
  const Field::Ref& field() const { return field_; }
  Pt degree() const { return static_cast<Pt>(q_) * q_ + 1; }
  Bigint order_formula() const {
    Bigint q = q_;
    return q * q * (q * q + 1) * (q - 1);
  }

  const PermGroup& group() const { return *group_; }
  const std::vector<Mat<4>>& generator_matrices() const { return gen_mats_; }
  const std::vector<std::string>& generator_names() const { return gen_names_; }

  /// Unipotent x(a,b); the family forms the Sylow 2-subgroup point stabilizer
  /// radical, x(a,b) x(c,d) = x(a+c, b+d+a^s c).
  Mat<4> unipotent(unsigned a, unsigned b) const {
    const Field& f = *field_;
    unsigned as = f.pow(a, sigma_);
    Mat<4> x;
    x.a[0] = {1, 0, 0, 0};
    x.a[1] = {a, 1, 0, 0};
    x.a[2] = {b, as, 1, 0};
    x.a[3] = {f.add(f.add(f.pow(a, sigma_ + 2), f.mul(a, b)), f.pow(b, sigma_)),
              f.add(f.mul(as, a), b), a, 1};
    return x;
  }

  Mat<4> torus(unsigned kappa) const {
    const Field& f = *field_;
    unsigned e = (1u << m_) + 1;  // 2^m + 1
    Mat<4> d;
    d.a[0][0] = f.pow(kappa, e);
    d.a[1][1] = f.pow(kappa, e - 1);
    d.a[2][2] = f.inv(d.a[1][1]);
    d.a[3][3] = f.inv(d.a[0][0]);
    return d;
  }

  static Mat<4> weyl() {
    Mat<4> w;
    for (unsigned i = 0; i < 4; ++i) w.a[i][3 - i] = 1;
    return w;
  }

  /// Index of a projective point of the ovoid; throws if the vector is not
  /// on the ovoid (used as a consistency guard during construction).
  Pt ovoid_index(std::array<unsigned, 4> v) const {
    const Field& f = *field_;
    v = normalize_projective(f, v);
    if (v[0] == 0) {
      if (v[1] == 0 && v[2] == 0) return 0;  // (0:0:0:1), infinity
      throw invalid_argument_error("SuzukiGroup: point not on the ovoid");
    }
    unsigned a = v[1], b = v[2];
    if (v[3] != ovoid_f(a, b)) throw invalid_argument_error("SuzukiGroup: point not on the ovoid");
    return 1 + static_cast<Pt>(a) * q_ + b;
  }

  std::array<unsigned, 4> ovoid_point(Pt index) const {
    if (index == 0) return {0, 0, 0, 1};
    unsigned a = (index - 1) / q_, b = (index - 1) % q_;
    return {1, a, b, ovoid_f(a, b)};
  }

  Perm perm_of_matrix(const Mat<4>& mat) const {
    std::vector<Pt> img(degree());
    for (Pt i = 0; i < degree(); ++i) img[i] = ovoid_index(mat_apply(*field_, mat, ovoid_point(i)));
    return Perm(std::move(img));
  }

 private:
  unsigned ovoid_f(unsigned a, unsigned b) const {
    const Field& f = *field_;
    return f.add(f.add(f.pow(a, sigma_ + 2), f.mul(a, b)), f.pow(b, sigma_));
  }

  void build() {
    gen_mats_ = {unipotent(1, 0), unipotent(0, 1), torus(field_->primitive_element()), weyl()};
    gen_names_ = {"x(1,0)", "x(0,1)", "d(k0)", "w"};
    std::vector<Perm> gens;
    for (const auto& m : gen_mats_) gens.push_back(perm_of_matrix(m));
    group_.emplace(degree(), std::move(gens));
  }

  unsigned m_, q_, sigma_;
  Field::Ref field_;
  std::vector<Mat<4>> gen_mats_;
  std::vector<std::string> gen_names_;
  std::optional<PermGroup> group_;
};

// ---- maximal subgroups and the structural lemma checks ----------------------

enum class SzKind { Parabolic, Dihedral, FrobeniusPlus, FrobeniusMinus, Subfield };

inline const char* sz_kind_name(SzKind k) {
  switch (k) {
    case SzKind::Parabolic: return "parabolic";
    case SzKind::Dihedral: return "dihedral";
    case SzKind::FrobeniusPlus: return "frobenius-plus";
    case SzKind::FrobeniusMinus: return "frobenius-minus";
    case SzKind::Subfield: return "subfield";
  }
  return "?";
}

/// Torus order attached to a Frobenius kind: q + sqrt(2q) + 1 or q - sqrt(2q) + 1.
inline std::uint64_t sz_frobenius_torus_order(const SuzukiGroup& g, SzKind kind) {
  std::uint64_t root = 1ull << (g.m() + 1);  // sqrt(2q)
  return kind == SzKind::FrobeniusPlus ? g.q() + root + 1 : g.q() - root + 1;
}

inline Bigint sz_subgroup_order(const SuzukiGroup& g, SzKind kind) {
  Bigint q = g.q();
  switch (kind) {
    case SzKind::Parabolic: return q * q * (q - 1);
    case SzKind::Dihedral: return 2 * (q - 1);
    case SzKind::FrobeniusPlus:
    case SzKind::FrobeniusMinus: return 4 * Bigint(sz_frobenius_torus_order(g, kind));
    case SzKind::Subfield: throw invalid_argument_error("sz_subgroup_order: subfield needs (n0,r0)");
  }
  throw std::logic_error("sz_subgroup_order");
}

}  // namespace gqx

#include "gqx/action.hpp"
#include "gqx/conjugacy.hpp"
#include "gqx/exponents.hpp"
#include "gqx/groupzoo.hpp"

namespace gqx {

/// Generators of a maximal subgroup of the given kind inside Sz(q).
/// Dihedral and parabolic kinds come straight from the defining matrices;
/// the Frobenius kinds locate a generator of the torus by seeded search and
/// extend it by a normalizing element found as a conjugating witness in the
/// torus generator's class.  The resulting order is certified by the caller
/// (or by sz_fixed_point_profile) against sz_subgroup_order.
inline std::vector<Perm> sz_maximal_subgroup(const SuzukiGroup& g, SzKind kind) {
  const Field& f = *g.field();
  switch (kind) {
    case SzKind::Parabolic:
      return {g.perm_of_matrix(g.unipotent(1, 0)), g.perm_of_matrix(g.unipotent(0, 1)),
              g.perm_of_matrix(g.torus(f.primitive_element()))};
    case SzKind::Dihedral:
      return {g.perm_of_matrix(g.torus(f.primitive_element())),
              g.perm_of_matrix(SuzukiGroup::weyl())};
    case SzKind::FrobeniusPlus:
    case SzKind::FrobeniusMinus: {
      std::uint64_t n = sz_frobenius_torus_order(g, kind);
      Perm x = find_element_of_order(g.group(), n, config().seed ^ n);
      std::uint64_t r = least_unit_of_order(n, 4);
      ConjClass cls(g.group(), x, config().memory_cap_bytes,
                    (g.group().order() / n).convert_to<std::size_t>());
      Perm xr = x;
      for (std::uint64_t i = 1; i < r; ++i) xr = xr * x;
      auto idx = cls.find(xr);
      if (!idx) throw search_failure_error("sz_maximal_subgroup: torus power not conjugate");
      return {x, cls.witness(*idx)};
    }
    case SzKind::Subfield:
      throw invalid_argument_error("sz_maximal_subgroup: use sz_subfield_check");
  }
  throw std::logic_error("sz_maximal_subgroup");
}

/// The distinguished involution x(0,1) (the whole x(0,b) sheet squares to
/// the identity).
inline Perm sz_involution(const SuzukiGroup& g) { return g.perm_of_matrix(g.unipotent(0, 1)); }

/// Sylow 2-subgroup: the full two-parameter unipotent sheet.
inline PermGroup sz_sylow2(const SuzukiGroup& g) {
  const Field& f = *g.field();
  std::vector<Perm> gens;
  unsigned t = 1;
  for (unsigned i = 0; i < f.degree(); ++i) {
    gens.push_back(g.perm_of_matrix(g.unipotent(t, 0)));
    gens.push_back(g.perm_of_matrix(g.unipotent(0, t)));
    t = f.mul(t, f.primitive_element());
  }
  return PermGroup(g.degree(), gens);
}

struct SzInvolutionClassReport {
  std::size_t class_size = 0;
  Bigint centralizer_order;
  std::uint64_t sylow_involutions = 0;
  bool sylow_involutions_central = false;
  std::uint64_t parabolic_involutions = 0;
  std::size_t natural_fixed_points = 0;
  std::uint64_t involution_total = 0;  // degree * sylow_involutions
  bool single_class = false;
};

/// Confirms that Sz(q) has exactly one class of involutions by comparing the
/// enumerated class against an independent global count: involutions in one
/// Sylow 2-subgroup are central there (so distinct Sylows share none), every
/// involution of the point stabilizer lies in the Sylow, and an involution
/// fixes exactly one point, which partitions all involutions over the q^2+1
/// points.
inline SzInvolutionClassReport sz_verify_involution_classes(const SuzukiGroup& g) {
  SzInvolutionClassReport rep;
  Perm iota = sz_involution(g);
  ConjClass cls(g.group(), iota, config().memory_cap_bytes,
                static_cast<std::size_t>(g.degree()) * (g.q() - 1));
  rep.class_size = cls.size();
  rep.centralizer_order = cls.centralizer_order();
  rep.natural_fixed_points = iota.fixed_points().size();

  PermGroup q2 = sz_sylow2(g);
  if (q2.order() != Bigint(g.q()) * g.q()) throw std::logic_error("sz: Sylow order");
  std::vector<Perm> sylow_invs;
  q2.for_each_element([&](const Perm& p) {
    if (p.order() == 2) sylow_invs.push_back(p);
  });
  rep.sylow_involutions = sylow_invs.size();
  rep.sylow_involutions_central = true;
  for (const Perm& s : sylow_invs)
    for (const Perm& gen : q2.generators())
      if (s * gen != gen * s) rep.sylow_involutions_central = false;

  PermGroup parab(g.degree(), sz_maximal_subgroup(g, SzKind::Parabolic));
  std::uint64_t pinvs = 0;
  parab.for_each_element([&](const Perm& p) {
    if (p.order() == 2) ++pinvs;
  });
  rep.parabolic_involutions = pinvs;

  rep.involution_total = static_cast<std::uint64_t>(g.degree()) * rep.sylow_involutions;
  rep.single_class = rep.natural_fixed_points == 1 &&
                     rep.sylow_involutions == g.q() - 1 &&
                     rep.parabolic_involutions == rep.sylow_involutions &&
                     rep.sylow_involutions_central &&
                     rep.class_size == rep.involution_total;
  return rep;
}

struct SzFixedPointProfile {
  SzKind kind;
  Pt degree = 0;
  std::uint64_t expected = 0;
  std::size_t observed = 0;
  std::uint64_t formula_value = 0;   // |Omega| |g^G meet H| / |g^G|
  std::uint64_t class_meet = 0;      // |g^G meet H| by enumeration of H
  bool transitive = false;           // C_G(g) on the fixed set
  bool index_identity = false;       // |fix| = |C : C meet stabilizer|
  bool fusion = false;               // g^G meet H = g^H
};

/// Fixed points of an involution on the coset action of a non-parabolic
/// maximal subgroup, checked three ways: direct count, the fixed-point
/// formula, and the centralizer-orbit identity.
inline SzFixedPointProfile sz_fixed_point_profile(const SuzukiGroup& g, SzKind kind) {
  if (kind == SzKind::Parabolic || kind == SzKind::Subfield)
    throw invalid_argument_error("sz_fixed_point_profile: kind handled elsewhere");
  SzFixedPointProfile rep;
  rep.kind = kind;
  rep.expected = kind == SzKind::Dihedral ? g.q() * g.q() / 2 : g.q() * g.q() / 4;

  std::vector<Perm> hgens = sz_maximal_subgroup(g, kind);
  Bigint horder = sz_subgroup_order(g, kind);
  GroupAction act = GroupAction::cosets(g.group(), hgens, horder);
  rep.degree = act.degree();

  PermGroup h(g.degree(), hgens);
  Perm iota;
  bool found = false;
  h.for_each_element([&](const Perm& p) {
    if (!found && p.order() == 2) {
      iota = p;
      found = true;
    }
  });
  if (!found) throw std::logic_error("sz_fixed_point_profile: no involution in subgroup");

  rep.observed = act.fixed_points(iota).size();

  ConjClass cls(g.group(), iota, config().memory_cap_bytes,
                static_cast<std::size_t>(g.degree()) * (g.q() - 1));
  std::uint64_t meet = 0;
  h.for_each_element([&](const Perm& p) {
    if (p.order() == 2 && cls.contains(p)) ++meet;
  });
  rep.class_meet = meet;
  rep.formula_value = fixed_count_formula(rep.degree, meet, cls.size());
  rep.fusion = class_fusion_check(g.group(), h, iota, cls);

  PermGroup cent = cls.centralizer_subgroup();
  auto ctr = centralizer_transitive_on_fixed(act, iota, cent);
  rep.transitive = ctr.transitive;
  rep.index_identity = ctr.index_identity;
  return rep;
}

struct SzSubfieldReport {
  unsigned n0 = 0, r0 = 0;
  Bigint small_order;
  bool embedding_is_hom = false;
  bool ovoid_preserved = false;
  bool order_matches = false;
  bool sylow_centralizer_bound = false;  // |C(embedded involution)| >= q^2
};

/// Subfield kind Sz(q0) inside Sz(q), q = q0^r0: embeds GF(2^n0) into
/// GF(2^(2m+1)) through the least root of the small modulus, maps the small
/// generator matrices entrywise, and certifies the embedded subgroup order.
/// The coset geometry itself is out of desk scale; this check pins the
/// embedding and the group order.
inline SzSubfieldReport sz_subfield_check(unsigned m, unsigned n0, unsigned r0) {
  if (n0 * r0 != 2 * m + 1 || n0 < 3 || !is_prime_u64(r0))
    throw invalid_argument_error("sz_subfield_check: need n0*r0 = 2m+1, n0 >= 3, r0 prime");
  SzSubfieldReport rep;
  rep.n0 = n0;
  rep.r0 = r0;
  SuzukiGroup small((n0 - 1) / 2);
  SuzukiGroup big(m);
  rep.small_order = small.order_formula();
  const Field& fs = *small.field();
  const Field& fb = *big.field();

  // least root of the small modulus in the big field
  unsigned root = 0;
  bool found = false;
  for (unsigned cand = 0; cand < fb.size() && !found; ++cand) {
    unsigned acc = 0, power = 1;
    for (unsigned c : fs.modulus()) {
      if (c) acc = fb.add(acc, power);
      power = fb.mul(power, cand);
    }
    if (acc == 0) {
      root = cand;
      found = true;
    }
  }
  if (!found) throw std::logic_error("sz_subfield_check: no root of the small modulus");
  auto embed = [&](unsigned a) {
    unsigned acc = 0, power = 1;
    for (unsigned i = 0; i < fs.degree(); ++i) {
      unsigned digit = (a >> i) & 1;
      if (digit) acc = fb.add(acc, power);
      power = fb.mul(power, root);
    }
    return acc;
  };
  rep.embedding_is_hom = true;
  for (unsigned a = 0; a < fs.size(); ++a)
    for (unsigned b = 0; b < fs.size(); ++b) {
      if (embed(fs.add(a, b)) != fb.add(embed(a), embed(b))) rep.embedding_is_hom = false;
      if (embed(fs.mul(a, b)) != fb.mul(embed(a), embed(b))) rep.embedding_is_hom = false;
    }

  std::vector<Perm> embedded;
  try {
    for (const Mat<4>& sm : small.generator_matrices()) {
      Mat<4> bm;
      for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; j < 4; ++j) bm.a[i][j] = embed(sm.a[i][j]);
      embedded.push_back(big.perm_of_matrix(bm));
    }
    rep.ovoid_preserved = true;
  } catch (const invalid_argument_error&) {
    rep.ovoid_preserved = false;
    return rep;
  }
  PermGroup sub(big.degree(), embedded);
  try {
    sub.build_with_order_target(rep.small_order);
    rep.order_matches = true;
  } catch (const invalid_argument_error&) {
    rep.order_matches = false;
  }

  // the embedded involution x(0,1) is central in the full unipotent sheet of
  // the big group, so its big-group centralizer has order at least q^2; the
  // matching upper bound is beyond coset desk scale and stays formula-level
  Mat<4> iota = big.unipotent(0, embed(1));
  rep.sylow_centralizer_bound = true;
  unsigned t = 1;
  for (unsigned i = 0; i < fb.degree(); ++i) {
    for (const Mat<4>& u : {big.unipotent(t, 0), big.unipotent(0, t)}) {
      if (mat_mul(fb, iota, u).a != mat_mul(fb, u, iota).a) rep.sylow_centralizer_bound = false;
    }
    t = fb.mul(t, fb.primitive_element());
  }
  return rep;
}

}  // namespace gqx

#endif  // GQX_SUZUKI_HPP_
