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
#ifndef GQX_ACTION_HPP_
#define GQX_ACTION_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <vector>

#include "gqx/common.hpp"
#include "gqx/conjugacy.hpp"
#include "gqx/perm.hpp"
#include "gqx/permgroup.hpp"

namespace gqx {

/// A transitive action of a permutation group: either the natural action on
/// its domain, or the action on the right cosets of a subgroup H.
///
/// Coset domains are realized as the G-orbit of a well-chosen H-orbit (as a
/// point set): the setwise stabilizer of the seed contains H, and the
/// identity degree * |H| = |G| certifies it equals H, i.e. the set orbit is
/// the coset space.  Seeds are tried in deterministic order of (orbit size,
/// least point) until the identity holds.  Point 0 is the trivial coset.
class GroupAction {
 public:
  static GroupAction natural(const PermGroup& g) {
    GroupAction a;
    a.g_ = &g;
    a.natural_ = true;
    a.degree_ = g.degree();
    a.stab_order_ = g.order();
    Bigint d = static_cast<std::uint64_t>(g.degree());
    if (a.stab_order_ % d != 0)
      throw invalid_argument_error("GroupAction: natural action is not transitive");
    a.stab_order_ /= d;
    return a;
  }

  /// Action on right cosets of H = <subgroup_gens>.  If the exact order of H
  /// is already certified by the caller it can be passed to skip a chain
  /// rebuild; it is re-checked against the realized degree either way.
  static GroupAction cosets(const PermGroup& g, const std::vector<Perm>& subgroup_gens,
                            std::optional<Bigint> subgroup_order = {},
                            std::uint64_t memory_cap = config().memory_cap_bytes) {
    for (const Perm& h : subgroup_gens)
      if (!g.contains(h)) throw invalid_argument_error("GroupAction: subgroup not contained in group");
    Bigint horder;
    if (subgroup_order) {
      PermGroup h(g.degree(), subgroup_gens);
      h.build_with_order_target(*subgroup_order);
      horder = *subgroup_order;
    } else {
      PermGroup h(g.degree(), subgroup_gens);
      horder = h.order();
    }
    Bigint target_degree = g.order() / horder;
    if (g.order() % horder != 0) throw std::logic_error("GroupAction: Lagrange violation");

    // candidate seeds: H-orbits ordered by (size, least point)
    std::vector<std::vector<Pt>> horbits;
    {
      std::vector<bool> seen(g.degree(), false);
      for (Pt p = 0; p < g.degree(); ++p) {
        if (seen[p]) continue;
        OrbitData od = orbit(subgroup_gens, p, g.degree());
        std::vector<Pt> o = od.orbit;
        std::sort(o.begin(), o.end());
        for (Pt q : o) seen[q] = true;
        horbits.push_back(std::move(o));
      }
      std::stable_sort(horbits.begin(), horbits.end(),
                       [](const auto& a, const auto& b) {
                         if (a.size() != b.size()) return a.size() < b.size();
                         return a[0] < b[0];
                       });
    }
    for (const auto& seed : horbits) {
      GroupAction a;
      a.g_ = &g;
      a.natural_ = false;
      a.stab_order_ = horder;
      a.k_ = seed.size();
      if (a.bfs_sets(seed, target_degree, memory_cap)) return a;
    }
    throw search_failure_error("GroupAction: no H-orbit seed realizes the coset space");
  }

  const PermGroup& group() const { return *g_; }
  bool is_natural() const { return natural_; }
  Pt degree() const { return degree_; }
  const Bigint& point_stabilizer_order() const { return stab_order_; }
  std::size_t set_size() const { return natural_ ? 1 : k_; }

  Pt apply(const Perm& g, Pt idx) const {
    if (natural_) return g[idx];
    scratch_.resize(k_);
    const Pt* s = &flat_[static_cast<std::size_t>(idx) * k_];
    for (std::size_t i = 0; i < k_; ++i) scratch_[i] = g[s[i]];
    std::sort(scratch_.begin(), scratch_.end());
    auto hit = find_set(scratch_.data());
    if (!hit) throw std::logic_error("GroupAction: image set left the domain");
    return *hit;
  }

  /// The permutation of the domain induced by a group element.
  Perm induced(const Perm& g) const {
    std::vector<Pt> img(degree_);
    for (Pt i = 0; i < degree_; ++i) img[i] = apply(g, i);
    return Perm(std::move(img));
  }

  std::vector<Pt> fixed_points(const Perm& g) const {
    std::vector<Pt> out;
    if (natural_) {
      for (Pt i = 0; i < degree_; ++i)
        if (g[i] == i) out.push_back(i);
      return out;
    }
    scratch_.resize(k_);
    for (Pt i = 0; i < degree_; ++i) {
      const Pt* s = &flat_[static_cast<std::size_t>(i) * k_];
      for (std::size_t t = 0; t < k_; ++t) scratch_[t] = g[s[t]];
      std::sort(scratch_.begin(), scratch_.end());
      if (std::equal(scratch_.begin(), scratch_.end(), s)) out.push_back(i);
    }
    return out;
  }

  /// Group of induced permutations with base starting at the trivial coset;
  /// built on first use.
  const PermGroup& image_group() const {
    if (!image_) {
      if (natural_ && g_->base()[0] == 0) return *g_;
      std::vector<Perm> gens;
      for (const Perm& g : g_->generators()) gens.push_back(induced(g));
      image_.emplace(degree_, std::move(gens), std::vector<Pt>{0});
      image_->build_with_order_target(g_->order() / kernel_order());
    }
    return *image_;
  }

 private:
  Bigint kernel_order() const { return 1; }  // faithful for our subgroups

  std::uint64_t hash_set(const Pt* s) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::size_t i = 0; i < k_; ++i) {
      std::uint64_t z = h ^ s[i];
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      h = z ^ (z >> 31);
    }
    return h;
  }

  std::optional<Pt> find_set(const Pt* s) const {
    std::size_t mask = table_.size() - 1;
    for (std::size_t i = hash_set(s) & mask;; i = (i + 1) & mask) {
      if (table_[i] == 0) return std::nullopt;
      Pt idx = table_[i] - 1;
      if (std::equal(s, s + k_, &flat_[static_cast<std::size_t>(idx) * k_])) return idx;
    }
  }

  void table_insert(Pt idx) {
    std::size_t mask = table_.size() - 1;
    const Pt* s = &flat_[static_cast<std::size_t>(idx) * k_];
    for (std::size_t i = hash_set(s) & mask;; i = (i + 1) & mask) {
      if (table_[i] == 0) {
        table_[i] = idx + 1;
        return;
      }
    }
  }

  bool bfs_sets(const std::vector<Pt>& seed, const Bigint& target_degree,
                std::uint64_t memory_cap) {
    flat_.clear();
    table_.assign(1 << 10, 0);
    flat_.insert(flat_.end(), seed.begin(), seed.end());
    table_insert(0);
    std::size_t count = 1;
    scratch_.resize(k_);
    for (std::size_t qi = 0; qi < count; ++qi) {
      for (const Perm& g : g_->generators()) {
        const Pt* s = &flat_[qi * k_];
        for (std::size_t t = 0; t < k_; ++t) scratch_[t] = g[s[t]];
        std::sort(scratch_.begin(), scratch_.end());
        if (find_set(scratch_.data())) continue;
        if (Bigint(static_cast<std::uint64_t>(count)) >= target_degree) return false;  // stabilizer too small
        std::uint64_t bytes = flat_.size() * sizeof(Pt) + table_.size() * 4;
        if (bytes > memory_cap) {
          std::ostringstream os;
          os << "GroupAction: coset enumeration exceeds memory cap (" << count
             << " cosets so far)";
          throw resource_cap_error(os.str());
        }
        flat_.insert(flat_.end(), scratch_.begin(), scratch_.end());
        table_insert(static_cast<Pt>(count));
        ++count;
        if (count * 16 > table_.size() * 10) rehash();
      }
    }
    if (Bigint(static_cast<std::uint64_t>(count)) != target_degree) return false;
    degree_ = static_cast<Pt>(count);
    return true;
  }

  void rehash() {
    std::size_t n = flat_.size() / k_;
    table_.assign(table_.size() * 2, 0);
    for (std::size_t i = 0; i < n; ++i) table_insert(static_cast<Pt>(i));
  }

  const PermGroup* g_ = nullptr;
  bool natural_ = true;
  Pt degree_ = 0;
  Bigint stab_order_;
  std::size_t k_ = 1;
  std::vector<Pt> flat_;
  std::vector<std::uint32_t> table_;
  mutable std::vector<Pt> scratch_;
  mutable std::optional<PermGroup> image_;
};

/// pi(g) = |Omega| * |g^G meet G_alpha| / |g^G|, checked for exactness.
inline std::uint64_t fixed_count_formula(std::uint64_t omega, std::uint64_t class_in_stabilizer,
                                         std::uint64_t class_size) {
  if (omega == 0 || class_size == 0)
    throw invalid_argument_error("fixed_count_formula: sizes must be positive");
  if (class_in_stabilizer == 0) return 0;
  Bigint num = Bigint(omega) * class_in_stabilizer;
  if (num % class_size != 0)
    throw invalid_argument_error("fixed_count_formula: non-integral result");
  return (num / class_size).convert_to<std::uint64_t>();
}

/// True iff the point stabilizer acts transitively on the remaining points.
inline bool is_two_transitive(const GroupAction& act) {
  if (act.degree() < 2) return false;
  const PermGroup& img = act.image_group();
  if (img.base()[0] != 0) throw std::logic_error("is_two_transitive: unexpected base");
  std::vector<Perm> stab = img.level_generators(1);
  if (stab.empty()) return act.degree() == 2;
  OrbitData od = orbit(stab, 1, act.degree());
  return od.orbit.size() == act.degree() - 1;
}

/// Orbit count of <gens> on a subset of the domain (the subset must be
/// invariant; walking outside it is an error).
inline std::size_t orbit_count_on(const GroupAction& act, const std::vector<Perm>& gens,
                                  const std::vector<Pt>& subset) {
  std::vector<Pt> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  auto inside = [&](Pt p) {
    return std::binary_search(sorted.begin(), sorted.end(), p);
  };
  std::vector<bool> seen(subset.size(), false);
  auto pos = [&](Pt p) {
    return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), p) -
                                    sorted.begin());
  };
  std::size_t orbits = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (seen[i]) continue;
    ++orbits;
    std::vector<Pt> queue{sorted[i]};
    seen[i] = true;
    while (!queue.empty()) {
      Pt p = queue.back();
      queue.pop_back();
      for (const Perm& g : gens) {
        Pt q = act.apply(g, p);
        if (!inside(q)) throw std::logic_error("orbit_count_on: subset not invariant");
        if (!seen[pos(q)]) {
          seen[pos(q)] = true;
          queue.push_back(q);
        }
      }
    }
  }
  return orbits;
}

struct CentralizerTransitivityReport {
  bool transitive = false;
  std::size_t orbit_count = 0;
  std::size_t fixed_count = 0;
  bool index_identity = false;  // |fix| == |C| / |C meet stabilizer of a fixed point|
  Bigint centralizer_order;
  Bigint stabilizer_intersection_order;
};

/// Orbits of C_G(x) on the fixed-point set of x in the given action; when
/// transitive, the index identity is confirmed by exhaustive count of the
/// centralizer elements fixing one fixed point.
inline CentralizerTransitivityReport centralizer_transitive_on_fixed(
    const GroupAction& act, const Perm& x, const PermGroup& centralizer) {
  CentralizerTransitivityReport rep;
  std::vector<Pt> fix = act.fixed_points(x);
  rep.fixed_count = fix.size();
  if (fix.empty()) throw invalid_argument_error("centralizer_transitive_on_fixed: empty fixed set");
  rep.orbit_count = orbit_count_on(act, centralizer.generators(), fix);
  rep.transitive = rep.orbit_count == 1;
  rep.centralizer_order = centralizer.order();
  if (rep.transitive) {
    Pt alpha = fix[0];
    std::uint64_t fixing = 0;
    centralizer.for_each_element([&](const Perm& c) {
      if (act.apply(c, alpha) == alpha) ++fixing;
    });
    rep.stabilizer_intersection_order = fixing;
    rep.index_identity =
        rep.centralizer_order == Bigint(static_cast<std::uint64_t>(fix.size())) * fixing;
  }
  return rep;
}

/// g^G meet H == g^H: every member of the big class lying in H is
/// H-conjugate to g.  H is enumerated, so |H| must be desk scale.
inline bool class_fusion_check(const PermGroup& g, const PermGroup& h, const Perm& x,
                               const ConjClass& class_in_g) {
  if (!h.contains(x)) throw invalid_argument_error("class_fusion_check: x not in subgroup");
  ConjClass class_in_h(h, x);
  std::size_t meet = 0;
  bool all_in_h_class = true;
  h.for_each_element([&](const Perm& y) {
    if (class_in_g.contains(y)) {
      ++meet;
      if (!class_in_h.contains(y)) all_in_h_class = false;
    }
  });
  return all_in_h_class && meet == class_in_h.size();
}

/// Schur-Zassenhaus corollary witness: probe is conjugate to the complement.
/// Hypothesis violations throw; search failure returns nullopt.
inline std::optional<Perm> complement_conjugacy_check(const PermGroup& whole,
                                                      const std::vector<Perm>& normal_gens,
                                                      const std::vector<Perm>& complement_gens,
                                                      const PermGroup& probe) {
  PermGroup n(whole.degree(), normal_gens);
  PermGroup k(whole.degree(), complement_gens);
  for (const Perm& g : whole.generators()) {
    for (const Perm& ng : normal_gens) {
      if (!n.contains(ng.conjugate_by(g)) || !n.contains(ng.conjugate_by(g.inverse())))
        throw invalid_argument_error("complement_conjugacy_check: subgroup not normal");
    }
  }
  Bigint quotient = whole.order() / n.order();
  if (gcd(n.order(), quotient) != 1)
    throw invalid_argument_error("complement_conjugacy_check: orders not coprime");
  if (probe.order() != k.order())
    throw invalid_argument_error("complement_conjugacy_check: probe order mismatch");
  std::optional<Perm> witness;
  whole.for_each_element([&](const Perm& h) {
    if (witness) return;
    for (const Perm& pg : probe.generators())
      if (!k.contains(pg.conjugate_by(h))) return;
    witness = h;
  });
  return witness;
}

/// Witness h with g in K^h (Schur-Zassenhaus corollary for elements).
inline std::optional<Perm> element_into_complement(const PermGroup& whole,
                                                   const std::vector<Perm>& normal_gens,
                                                   const std::vector<Perm>& complement_gens,
                                                   const Perm& g) {
  PermGroup n(whole.degree(), normal_gens);
  PermGroup k(whole.degree(), complement_gens);
  Bigint quotient = whole.order() / n.order();
  if (gcd(n.order(), quotient) != 1)
    throw invalid_argument_error("element_into_complement: orders not coprime");
  if (k.order() % g.order() != 0)
    throw invalid_argument_error("element_into_complement: |g| does not divide |K|");
  std::optional<Perm> witness;
  whole.for_each_element([&](const Perm& h) {
    if (witness) return;
    if (k.contains(g.conjugate_by(h.inverse()))) witness = h;
  });
  return witness;
}

}  // namespace gqx

#endif  // GQX_ACTION_HPP_
