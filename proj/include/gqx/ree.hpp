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
#ifndef GQX_REE_HPP_
#define GQX_REE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gqx/field.hpp"
#include "gqx/matrix.hpp"
#include "gqx/permgroup.hpp"

namespace gqx {

/// R(q) = 2G2(q), q = 3^(2m+1), in its 7-dimensional orthogonal
/// representation, acting 2-transitively on q^3 + 1 projective points.
///
/// The generators are the twisted root elements of G2(q): with s = 3^(m+1)
/// the unipotent family is
///
///   u(a,b,c) = x_a(a) x_b(a^s) x_ab(b) x_2ab(c)
///              x_3ab(-(a^(s+3) + b^s)) x_3a2b(c^s - a^(2s+3)),
///
/// where x_r(t) = I + tE_r + t^2 E_r^2/2 over the integral Chevalley basis
/// of the 7-dimensional module (weight-ordered), together with the torus
/// h(k) = diag(k^(3^m w1_i + w2_i)) and the antidiagonal Weyl involution.
/// Point 0 is the B-fixed point at infinity; the affine sheet is the regular
/// u(a,b,c)-orbit of the opposite point, in lexicographic (a,b,c) order.
class ReeGroup {
 public:
  explicit ReeGroup(unsigned m) : m_(m) {
    if (2 * m + 1 > 3) throw invalid_argument_error("ReeGroup: degree budget exceeded (m >= 2)");
    field_ = Field::make(3, 2 * m + 1);
    q_ = field_->size();
    sigma_ = 1;
    for (unsigned i = 0; i < m + 1; ++i) sigma_ *= 3;
    build();
  }

  unsigned m() const { return m_; }
  unsigned q() const { return q_; }
  const Field::Ref& field() const { return field_; }
  Pt degree() const { return static_cast<Pt>(q_) * q_ * q_ + 1; }
  Bigint order_formula() const {
    Bigint q = q_;
    return q * q * q * (q * q * q + 1) * (q - 1);
  }

  const PermGroup& group() const { return *group_; }
  const std::vector<Mat<7>>& generator_matrices() const { return gen_mats_; }
  const std::vector<std::string>& generator_names() const { return gen_names_; }

  /// Twisted unipotent; {u(a,b,c)} is a Sylow 3-subgroup of order q^3 with
  /// centre {u(0,0,c)}.
  Mat<7> unipotent(unsigned a, unsigned b, unsigned c) const {
    const Field& f = *field_;
    unsigned as = f.pow(a, sigma_);
    unsigned y1 = f.neg(f.add(f.pow(a, sigma_ + 3), f.pow(b, sigma_)));
    unsigned y2 = f.sub(f.pow(c, sigma_), f.pow(a, 2 * sigma_ + 3));
    Mat<7> u = root_element(0, a);
    u = mat_mul(f, u, root_element(1, as));
    u = mat_mul(f, u, root_element(2, b));
    u = mat_mul(f, u, root_element(3, c));
    u = mat_mul(f, u, root_element(4, y1));
    u = mat_mul(f, u, root_element(5, y2));
    return u;
  }

  Mat<7> torus(unsigned kappa) const {
    const Field& f = *field_;
    static constexpr int kWa[7] = {1, -1, 2, 0, -2, 1, -1};
    static constexpr int kWb[7] = {0, 1, -1, 0, 1, -1, 0};
    unsigned tm = sigma_ / 3;  // 3^m
    Mat<7> h;
    for (unsigned i = 0; i < 7; ++i) {
      long e = static_cast<long>(tm) * kWa[i] + kWb[i];
      long n = static_cast<long>(q_) - 1;
      unsigned ee = static_cast<unsigned>(((e % n) + n) % n);
      h.a[i][i] = f.pow(kappa, ee);
    }
    return h;
  }

  Mat<7> weyl() const {
    Mat<7> w;
    unsigned neg1 = field_->neg(1);
    for (unsigned i = 0; i < 7; ++i) w.a[i][6 - i] = neg1;
    return w;
  }

  Pt point_index(std::array<unsigned, 7> v) const {
    v = normalize_projective(*field_, v);
    auto it = index_.find(pack(v));
    if (it == index_.end()) throw invalid_argument_error("ReeGroup: point not in the natural domain");
    return it->second;
  }

  const std::array<unsigned, 7>& point(Pt index) const { return pts_[index]; }

  Perm perm_of_matrix(const Mat<7>& mat) const {
    std::vector<Pt> img(degree());
    for (Pt i = 0; i < degree(); ++i) img[i] = point_index(mat_apply(*field_, mat, pts_[i]));
    return Perm(std::move(img));
  }

  /// x_r(t) for the six positive roots in height order
  /// (a, b, a+b, 2a+b, 3a+b, 3a+2b).
  Mat<7> root_element(unsigned root, unsigned t) const {
    const Field& f = *field_;
    const auto& E = kRootMats[root];
    Mat<7> x = Mat<7>::identity();
    unsigned t2 = f.mul(t, t);
    for (unsigned i = 0; i < 7; ++i)
      for (unsigned j = 0; j < 7; ++j) {
        if (E[i][j]) x.a[i][j] = f.add(x.a[i][j], scale(E[i][j], t));
        int e2 = 0;
        for (unsigned k = 0; k < 7; ++k) e2 += E[i][k] * E[k][j];
        if (e2 % 3) x.a[i][j] = f.add(x.a[i][j], scale(e2 / 2, t2));
      }
    return x;
  }

 private:
  unsigned scale(int coeff, unsigned t) const {  // integer coefficient times field element
    int c = ((coeff % 3) + 3) % 3;
    if (c == 0) return 0;
    if (c == 1) return t;
    return field_->neg(t);
  }

  static std::uint64_t pack(const std::array<unsigned, 7>& v) {
    std::uint64_t k = 0;
    for (unsigned x : v) k = (k << 5) | x;
    return k;
  }

  void build() {
    const Field& f = *field_;
    // enumerate the domain: infinity, then the regular affine sheet
    pts_.clear();
    index_.clear();
    pts_.push_back({1, 0, 0, 0, 0, 0, 0});
    index_[pack(pts_[0])] = 0;
    std::array<unsigned, 7> opposite{0, 0, 0, 0, 0, 0, 1};
    for (unsigned a = 0; a < q_; ++a)
      for (unsigned b = 0; b < q_; ++b)
        for (unsigned c = 0; c < q_; ++c) {
          auto v = normalize_projective(f, mat_apply(f, unipotent(a, b, c), opposite));
          Pt idx = static_cast<Pt>(pts_.size());
          if (!index_.emplace(pack(v), idx).second)
            throw std::logic_error("ReeGroup: affine sheet not regular");
          pts_.push_back(v);
        }
    if (pts_.size() != degree()) throw std::logic_error("ReeGroup: domain size mismatch");

    gen_mats_ = {unipotent(1, 0, 0), unipotent(0, 1, 0), unipotent(0, 0, 1),
                 torus(f.primitive_element()), weyl()};
    gen_names_ = {"u(1,0,0)", "u(0,1,0)", "u(0,0,1)", "h(k0)", "w"};
    std::vector<Perm> gens;
    for (const auto& mg : gen_mats_) gens.push_back(perm_of_matrix(mg));
    group_.emplace(degree(), std::move(gens));
  }

  // Chevalley basis matrices of the positive root elements on the 7-dim
  // module, basis ordered by descending weight height.
  static constexpr int kRootMats[6][7][7] = {
      // alpha
      {{0, 1, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 0},
       {0, 0, 0, 2, 0, 0, 0},
       {0, 0, 0, 0, -1, 0, 0},
       {0, 0, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, -1},
       {0, 0, 0, 0, 0, 0, 0}},
      // beta
      {{0, 0, 0, 0, 0, 0, 0},
       {0, 0, -1, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 1, 0},
       {0, 0, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 0}},
      // alpha + beta
      {{0, 0, -1, 0, 0, 0, 0},
       {0, 0, 0, 2, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, -1, 0},
       {0, 0, 0, 0, 0, 0, 1},
       {0, 0, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 0}},
      // 2 alpha + beta
      {{0, 0, 0, 2, 0, 0, 0},
       {0, 0, 0, 0, 1, 0, 0},
       {0, 0, 0, 0, 0, -1, 0},
       {0, 0, 0, 0, 0, 0, -1},
       {0, 0, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 0}},
      // 3 alpha + beta
      {{0, 0, 0, 0, 1, 0, 0},
       {0, 0, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, -1},
       {0, 0, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 0}},
      // 3 alpha + 2 beta
      {{0, 0, 0, 0, 0, -1, 0},
       {0, 0, 0, 0, 0, 0, 1},
       {0, 0, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 0}}};

  unsigned m_, q_, sigma_;
  Field::Ref field_;
  std::vector<std::array<unsigned, 7>> pts_;
  std::unordered_map<std::uint64_t, Pt> index_;
  std::vector<Mat<7>> gen_mats_;
  std::vector<std::string> gen_names_;
  std::optional<PermGroup> group_;
};

// ---- maximal subgroup kinds and the structural lemma checks -----------------

enum class ReeKind {
  Parabolic,
  InvolutionCentralizer,
  FourGroupNormalizer,
  FrobeniusPlus,
  FrobeniusMinus,
  Subfield
};

inline const char* ree_kind_name(ReeKind k) {
  switch (k) {
    case ReeKind::Parabolic: return "parabolic";
    case ReeKind::InvolutionCentralizer: return "involution-centralizer";
    case ReeKind::FourGroupNormalizer: return "four-group-normalizer";
    case ReeKind::FrobeniusPlus: return "frobenius-plus";
    case ReeKind::FrobeniusMinus: return "frobenius-minus";
    case ReeKind::Subfield: return "subfield";
  }
  return "?";
}

inline std::uint64_t ree_frobenius_torus_order(unsigned q, unsigned m, ReeKind kind) {
  std::uint64_t root = 1;
  for (unsigned i = 0; i < m + 1; ++i) root *= 3;  // sqrt(3q)
  return kind == ReeKind::FrobeniusPlus ? q + root + 1 : q - root + 1;
}

}  // namespace gqx

#include "gqx/action.hpp"
#include "gqx/conjugacy.hpp"
#include "gqx/groupzoo.hpp"

namespace gqx {

inline Bigint ree_subgroup_order(unsigned q, unsigned m, ReeKind kind) {
  Bigint bq = q;
  switch (kind) {
    case ReeKind::Parabolic: return bq * bq * bq * (bq - 1);
    case ReeKind::InvolutionCentralizer: return bq * (bq * bq - 1);  // 2 |PSL(2,q)|
    case ReeKind::FourGroupNormalizer: return 6 * (bq + 1);          // 4 * 2(q+1)/4 * 3
    case ReeKind::FrobeniusPlus:
    case ReeKind::FrobeniusMinus: return 6 * Bigint(ree_frobenius_torus_order(q, m, kind));
    case ReeKind::Subfield: throw invalid_argument_error("ree_subgroup_order: subfield needs (n0,r0)");
  }
  throw std::logic_error("ree_subgroup_order");
}

/// Abstract model recipe of a non-parabolic maximal subgroup type.
inline Recipe ree_model_recipe(unsigned q, unsigned m, ReeKind kind) {
  switch (kind) {
    case ReeKind::InvolutionCentralizer: {
      Recipe r;
      r.kind = Recipe::Kind::Direct;
      Recipe c2;
      c2.kind = Recipe::Kind::Cyclic;
      c2.n = 2;
      Recipe psl;
      psl.kind = Recipe::Kind::Psl2;
      psl.n = q;
      r.parts = {c2, psl};
      return r;
    }
    case ReeKind::FourGroupNormalizer:
      return four_group_dihedral_recipe((q + 1) / 4, true);
    case ReeKind::FrobeniusPlus:
    case ReeKind::FrobeniusMinus:
      return frobenius_recipe(ree_frobenius_torus_order(q, m, kind), 6);
    default:
      throw invalid_argument_error("ree_model_recipe: no abstract model for this kind");
  }
}

/// The Weyl generator is an involution; it serves as the distinguished
/// involution representative.
inline Perm ree_involution(const ReeGroup& g) {
  Perm w = g.perm_of_matrix(g.weyl());
  if (w.order() != 2) throw std::logic_error("ree_involution: Weyl element is not an involution");
  return w;
}

/// Sylow 3-subgroup: the twisted unipotent sheet (upper unitriangular, hence
/// a 3-group; the order target is exact).
inline PermGroup ree_sylow3(const ReeGroup& g) {
  const Field& f = *g.field();
  std::vector<Perm> gens;
  unsigned t = 1;
  for (unsigned i = 0; i < f.degree(); ++i) {
    gens.push_back(g.perm_of_matrix(g.unipotent(t, 0, 0)));
    gens.push_back(g.perm_of_matrix(g.unipotent(0, t, 0)));
    gens.push_back(g.perm_of_matrix(g.unipotent(0, 0, t)));
    t = f.mul(t, f.primitive_element());
  }
  PermGroup u(g.degree(), gens);
  Bigint q3 = Bigint(g.q()) * g.q() * g.q();
  u.build_with_order_target(q3);
  return u;
}

/// Abelian layer {u(0,b,c)} of the Sylow 3-subgroup; all of its nontrivial
/// elements have order 3.
inline std::vector<Perm> ree_sylow_layer_gens(const ReeGroup& g) {
  const Field& f = *g.field();
  std::vector<Perm> gens;
  unsigned t = 1;
  for (unsigned i = 0; i < f.degree(); ++i) {
    gens.push_back(g.perm_of_matrix(g.unipotent(0, t, 0)));
    gens.push_back(g.perm_of_matrix(g.unipotent(0, 0, t)));
    t = f.mul(t, f.primitive_element());
  }
  return gens;
}

/// Decodes which unipotent parameter triple a permutation is, if any: it
/// must fix infinity and act on the opposite point the way u(a,b,c) does.
inline std::optional<std::array<unsigned, 3>> ree_unipotent_params(const ReeGroup& g,
                                                                   const Perm& z) {
  if (z[0] != 0) return std::nullopt;
  Pt img = z[1];  // point 1 is the opposite point u(0,0,0) . <e7>
  if (img == 0) return std::nullopt;
  Pt off = img - 1;
  unsigned q = g.q();
  std::array<unsigned, 3> abc{static_cast<unsigned>(off / (q * q)),
                              static_cast<unsigned>((off / q) % q),
                              static_cast<unsigned>(off % q)};
  if (g.perm_of_matrix(g.unipotent(abc[0], abc[1], abc[2])) != z) return std::nullopt;
  return abc;
}

struct ReeOrder3Survey {
  // real class
  std::size_t real_size = 0;
  Bigint real_centralizer;
  bool real_flag = false;
  bool sylow_witness = false;  // a subgroup of order q^3 centralizes the representative
  // involution class (drives the involution-centralizer subgroup)
  std::size_t involution_class_size = 0;
  Bigint involution_centralizer;
  // non-real representative found inside C(involution)
  bool nonreal_found = false;
  bool nonreal_commutes_with_involution = false;
  bool nonreal_outside_real_class = false;
  Bigint nonreal_constructive_centralizer;  // certified subgroup of C(y)
  // extended tier
  bool extended_ran = false;
  std::size_t nonreal_class_size = 0;
  std::size_t nonreal_inverse_class_size = 0;
  bool nonreal_flag_exact = false;     // direct y^-1 not in y^G
  bool mutual_inversion = false;
  bool exactly_three_classes = false;  // Sylow coverage
};

struct ReeSurveyWitnesses {
  Perm involution;
  PermGroup involution_centralizer;  // C_2 x PSL(2,q) realized in-group
  Perm real_rep;
  Perm nonreal_rep;
  PermGroup nonreal_centralizer;     // the certified order-2q^2 subgroup
};

/// The order-3 class survey of R(q).  The default tier enumerates the real
/// class and the involution class exactly and certifies a centralizer of
/// order 2q^2 for a non-real element constructively; the extended tier also
/// enumerates the two non-real classes (about 6.9 million elements each at
/// q = 27) and settles the class count by Sylow coverage.
inline ReeOrder3Survey ree_order3_survey(const ReeGroup& g, bool extended,
                                         ReeSurveyWitnesses* witnesses = nullptr,
                                         std::uint64_t memory_cap = config().memory_cap_bytes) {
  ReeOrder3Survey rep;
  unsigned q = g.q();
  const PermGroup& G = g.group();

  // real class: centre of the Sylow 3-subgroup
  Perm xreal = g.perm_of_matrix(g.unipotent(0, 0, 1));
  ConjClass real_cls(G, xreal, memory_cap, 520000);
  rep.real_size = real_cls.size();
  rep.real_centralizer = real_cls.centralizer_order();
  rep.real_flag = real_cls.is_real();
  PermGroup sylow = ree_sylow3(g);
  bool central = G.contains(xreal) && sylow.contains(xreal);
  for (const Perm& s : sylow.generators())
    if (s * xreal != xreal * s) central = false;
  rep.sylow_witness = central && sylow.order() == rep.real_centralizer;

  // involutions
  Perm iota = ree_involution(g);
  ConjClass inv_cls(G, iota, memory_cap, 520000);
  rep.involution_class_size = inv_cls.size();
  rep.involution_centralizer = inv_cls.centralizer_order();
  PermGroup h = inv_cls.centralizer_subgroup();

  // a non-real representative: an order-3 element of C(iota)
  Perm y = find_element_of_order(h, 3, config().seed ^ 0x3333);
  rep.nonreal_found = true;
  rep.nonreal_commutes_with_involution = (y * iota == iota * y);
  rep.nonreal_outside_real_class = !real_cls.contains(y);

  // constructive centralizer of y: the abelian layer of a Sylow 3-subgroup
  // containing y, together with iota
  OrbitData od = G.point_orbit(0);
  std::vector<Perm> cgens;
  for (Pt p : y.fixed_points()) {
    Perm t = transporter(od, G.generators(), p);
    Perm z = y.conjugate_by(t.inverse());
    auto abc = ree_unipotent_params(g, z);
    if (!abc || (*abc)[0] != 0) continue;
    for (const Perm& lg : ree_sylow_layer_gens(g)) cgens.push_back(lg.conjugate_by(t));
    break;
  }
  if (cgens.empty()) throw search_failure_error("ree_order3_survey: no Sylow layer containing y");
  cgens.push_back(iota);
  for (const Perm& c : cgens)
    if (c * y != y * c) throw std::logic_error("ree_order3_survey: centralizer generator fails");
  PermGroup cy(g.degree(), cgens);
  cy.build_with_order_target(Bigint(2) * q * q);
  rep.nonreal_constructive_centralizer = cy.order();

  if (extended) {
    rep.extended_ran = true;
    std::size_t expect = (G.order() / (Bigint(2) * q * q)).convert_to<std::size_t>();
    {
      ConjClass c1(G, y, memory_cap, expect);
      rep.nonreal_class_size = c1.size();
      rep.nonreal_flag_exact = !c1.is_real();
      // exactly three order-3 classes: every order-3 element of the Sylow
      // 3-subgroup (they all lie in the abelian layer) belongs to the real
      // class, to c1, or to the inverse class of c1
      bool covered = true;
      for (unsigned b = 0; b < q && covered; ++b)
        for (unsigned c = 0; c < q; ++c) {
          if (b == 0 && c == 0) continue;
          Perm u = g.perm_of_matrix(g.unipotent(0, b, c));
          if (u.order() != 3) {
            covered = false;
            break;
          }
          bool in_c2 = c1.contains(u.inverse());  // u in c1^-1  iff  u^-1 in c1
          if (!(real_cls.contains(u) || c1.contains(u) || in_c2)) {
            covered = false;
            break;
          }
        }
      // also: order-3 elements outside the layer do not exist in the Sylow
      std::size_t order3_in_sylow = 0;
      sylow.for_each_element([&](const Perm& p) {
        if (p.order() == 3) ++order3_in_sylow;
      });
      covered = covered && order3_in_sylow == static_cast<std::size_t>(q) * q - 1;
      rep.exactly_three_classes = covered;
    }
    {
      ConjClass c2(G, y.inverse(), memory_cap, expect);
      rep.nonreal_inverse_class_size = c2.size();
      rep.mutual_inversion = c2.contains(y.inverse()) && !c2.contains(y) &&
                             rep.nonreal_inverse_class_size == rep.nonreal_class_size;
    }
  }

  if (witnesses) {
    witnesses->involution = iota;
    witnesses->involution_centralizer = std::move(h);
    witnesses->real_rep = xreal;
    witnesses->nonreal_rep = y;
    witnesses->nonreal_centralizer = std::move(cy);
  }
  return rep;
}

struct ReeFixedPointProfile {
  ReeKind kind;
  bool formula_only = false;
  Pt degree = 0;
  std::uint64_t expected = 0;
  std::size_t observed = 0;
  std::uint64_t class_meet_in_model = 0;  // |y^H| in the in-group subgroup
  bool formula_consistent = false;        // |Omega| |y^G meet H| / |y^G| == expected
  bool transitive = false;
  bool index_identity = false;
};

/// Fixed points of a non-real order-3 element on the coset action of the
/// involution-centralizer subgroup (enumerable at q = 27; expected count q).
/// The other non-parabolic kinds are beyond desk scale as coset actions and
/// report formula-level values only.
inline ReeFixedPointProfile ree_fixed_point_profile(const ReeGroup& g, ReeKind kind,
                                                    const ReeSurveyWitnesses& w) {
  ReeFixedPointProfile rep;
  rep.kind = kind;
  unsigned q = g.q();
  switch (kind) {
    case ReeKind::FourGroupNormalizer:
    case ReeKind::FrobeniusPlus:
    case ReeKind::FrobeniusMinus: {
      rep.formula_only = true;
      rep.expected = static_cast<std::uint64_t>(q) * q / 3;
      Bigint deg = g.group().order() / ree_subgroup_order(q, g.m(), kind);
      rep.degree = deg.convert_to<Pt>();
      // |Omega| * |y^G meet H| / |y^G| with the model's two classes of size
      // |H|/6 fusing into the two G-classes: |y^G meet H| = |H|/6
      Bigint meet = ree_subgroup_order(q, g.m(), kind) / 6;
      Bigint cls = g.group().order() / (Bigint(2) * q * q);
      rep.formula_consistent = deg * meet == cls * rep.expected;
      return rep;
    }
    case ReeKind::InvolutionCentralizer:
      break;
    default:
      throw invalid_argument_error("ree_fixed_point_profile: kind handled elsewhere");
  }
  rep.expected = q;
  GroupAction act = GroupAction::cosets(g.group(), w.involution_centralizer.generators(),
                                        w.involution_centralizer.order());
  rep.degree = act.degree();
  const Perm& y = w.nonreal_rep;
  rep.observed = act.fixed_points(y).size();

  // |y^G meet H| at formula level: y^H has size |H| / |C_H(y)| and the two
  // H-classes of order-3 elements fuse into the two inverse G-classes, so
  // the meet equals |y^H|.
  ConjClass yh(w.involution_centralizer, y);
  rep.class_meet_in_model = yh.size();
  Bigint cls = g.group().order() / (Bigint(2) * q * q);
  rep.formula_consistent =
      Bigint(rep.degree) * rep.class_meet_in_model == cls * rep.observed;

  auto ctr = centralizer_transitive_on_fixed(act, y, w.nonreal_centralizer);
  rep.transitive = ctr.transitive;
  rep.index_identity = ctr.index_identity;
  return rep;
}

}  // namespace gqx

#endif  // GQX_REE_HPP_
