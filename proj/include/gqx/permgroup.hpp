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
#ifndef GQX_PERMGROUP_HPP_
#define GQX_PERMGROUP_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <optional>
#include <vector>

#include "gqx/common.hpp"
#include "gqx/perm.hpp"

namespace gqx {

/// Orbit of a point with a Schreier vector.  Edge labels index the generator
/// list handed in (even = generator i/2 applied forward, odd = backward).
struct OrbitData {
  Pt start = 0;
  std::vector<Pt> orbit;           // BFS discovery order, orbit[0] == start
  std::vector<std::int32_t> pos;   // point -> index in orbit, -1 outside
  std::vector<std::int32_t> via;   // point -> edge label reaching it, -1 at root
  std::vector<Pt> from;            // point -> predecessor point
};

/// Breadth-first orbit with Schreier vector; FIFO queue, generators in the
/// order given (each followed by its inverse) for deterministic trees.
inline OrbitData orbit(const std::vector<Perm>& gens, Pt start, Pt degree) {
  OrbitData od;
  od.start = start;
  od.pos.assign(degree, -1);
  od.via.assign(degree, -1);
  od.from.assign(degree, 0);
  std::vector<Perm> labels;
  labels.reserve(gens.size() * 2);
  for (const Perm& g : gens) {
    labels.push_back(g);
    labels.push_back(g.inverse());
  }
  od.orbit.push_back(start);
  od.pos[start] = 0;
  for (std::size_t qi = 0; qi < od.orbit.size(); ++qi) {
    Pt p = od.orbit[qi];
    for (std::size_t li = 0; li < labels.size(); ++li) {
      Pt q = labels[li][p];
      if (od.pos[q] < 0) {
        od.pos[q] = static_cast<std::int32_t>(od.orbit.size());
        od.via[q] = static_cast<std::int32_t>(li);
        od.from[q] = p;
        od.orbit.push_back(q);
      }
    }
  }
  return od;
}

/// Rebuilds a transporter element u with start^u = target from the Schreier
/// vector of `od` over the same generator list.
inline Perm transporter(const OrbitData& od, const std::vector<Perm>& gens, Pt target) {
  if (od.pos[target] < 0) throw invalid_argument_error("transporter: point not in orbit");
  std::vector<std::int32_t> edges;
  for (Pt p = target; p != od.start; p = od.from[p]) edges.push_back(od.via[p]);
  Pt degree = static_cast<Pt>(od.pos.size());
  std::vector<Pt> img(degree);
  for (Pt x = 0; x < degree; ++x) img[x] = x;
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
    const Perm& g = gens[*it / 2];
    if (*it % 2 == 0) {
      for (Pt x = 0; x < degree; ++x) img[x] = g[img[x]];
    } else {
      Perm gi = g.inverse();
      for (Pt x = 0; x < degree; ++x) img[x] = gi[img[x]];
    }
  }
  return Perm(std::move(img));
}

/// Permutation group with a lazily built base and strong generating set.
///
/// The chain is produced deterministically: a seeded product-replacement
/// preload followed by the systematic Schreier generator sweep, so the
/// reported order is certified by Schreier's lemma without reference to any
/// expected value.  Base points follow the first-moved-point rule, after any
/// caller-supplied hints.  Transversals are stored as Schreier vectors and
/// walked on demand, which keeps memory linear in the degree.
class PermGroup {
 public:
  PermGroup() = default;
  explicit PermGroup(Pt degree, std::vector<Perm> gens, std::vector<Pt> base_hint = {})
      : degree_(degree), gens_(std::move(gens)), base_hint_(std::move(base_hint)) {
    for (const Perm& g : gens_)
      if (g.degree() != degree_) throw invalid_argument_error("PermGroup: generator degree mismatch");
    if (gens_.empty()) throw invalid_argument_error("PermGroup: at least one generator required");
  }

  Pt degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  /// Exact group order (arbitrary precision).
  const Bigint& order() const {
    ensure_chain();
    return order_;
  }

  /// Chain completion that accepts a trusted order target: the random phase
  /// stops as soon as the product of fundamental orbit lengths reaches the
  /// target, which proves completeness (the product is always a lower bound
  /// for the order of the generated group).  Falls back to the systematic
  /// sweep if the target is not reached; throws if the certified order then
  /// disagrees with the target.
  void build_with_order_target(const Bigint& target) const {
    if (chain_built_) {
      if (order_ != target) throw invalid_argument_error("PermGroup: order target mismatch");
      return;
    }
    build_chain(&target);
    if (order_ != target) throw invalid_argument_error("PermGroup: order target mismatch");
  }

  bool contains(const Perm& g) const {
    if (g.degree() != degree_) throw invalid_argument_error("PermGroup: degree mismatch");
    ensure_chain();
    std::vector<Pt> work = g.images();
    return sift_inplace(work, 0) == static_cast<int>(levels_.size()) && is_id(work);
  }

  /// Sift residue (identity iff contained).
  Perm sift(const Perm& g) const {
    if (g.degree() != degree_) throw invalid_argument_error("PermGroup: degree mismatch");
    ensure_chain();
    std::vector<Pt> work = g.images();
    sift_inplace(work, 0);
    return Perm(std::move(work));
  }

  std::vector<Pt> base() const {
    ensure_chain();
    std::vector<Pt> b;
    for (const auto& lv : levels_) b.push_back(lv.base);
    return b;
  }

  /// Images of the base points under g; determines g uniquely inside the
  /// group.  g need not be a member.
  std::vector<Pt> base_images(const Perm& g) const {
    ensure_chain();
    std::vector<Pt> out;
    out.reserve(levels_.size());
    for (const auto& lv : levels_) out.push_back(g[lv.base]);
    return out;
  }

  /// Reconstructs the unique member with the given base images; throws if no
  /// member exists with that tuple.
  Perm element_from_base_images(const std::vector<Pt>& t) const {
    ensure_chain();
    if (t.size() != levels_.size()) throw invalid_argument_error("PermGroup: base image count");
    std::vector<Pt> e(degree_), einv(degree_), u(degree_), scratch(degree_);
    for (Pt x = 0; x < degree_; ++x) e[x] = einv[x] = x;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      Pt y = einv[t[i]];
      if (levels_[i].pos[y] < 0) throw invalid_argument_error("PermGroup: no element with those base images");
      materialize_transversal(i, y, u);
      for (Pt x = 0; x < degree_; ++x) scratch[x] = e[u[x]];
      e.swap(scratch);
      for (Pt x = 0; x < degree_; ++x) einv[e[x]] = x;
    }
    return Perm(std::move(e));
  }

  /// Generators of the stabilizer of base()[0..level-1] (strong generators
  /// attached at the given level).
  std::vector<Perm> level_generators(std::size_t level) const {
    ensure_chain();
    std::vector<Perm> out;
    if (level >= levels_.size()) return out;
    for (std::int32_t id : levels_[level].gen_ids)
      if (id % 2 == 0) out.emplace_back(pool_[id]);
    return out;
  }

  std::size_t chain_length() const {
    ensure_chain();
    return levels_.size();
  }

  /// Fundamental orbit sizes (their product is the order).
  std::vector<std::size_t> fundamental_orbit_sizes() const {
    ensure_chain();
    std::vector<std::size_t> out;
    for (const auto& lv : levels_) out.push_back(lv.orbit.size());
    return out;
  }

  /// Deterministic product-replacement stream over the group's generators.
  /// A stream carries its own state: two streams with equal seeds yield the
  /// same elements.  Confine each stream to one task.
  class RandomStream {
   public:
    RandomStream(const std::vector<Perm>& gens, std::uint64_t seed) : rng_(seed) {
      while (slots_.size() < std::max<std::size_t>(gens.size(), 8))
        slots_.push_back(gens[slots_.size() % gens.size()]);
      for (int i = 0; i < 96; ++i) step();
    }
    const Perm& next() { return step(); }

   private:
    const Perm& step() {
      std::size_t n = slots_.size();
      std::size_t i = rng_.below(n), j = rng_.below(n - 1);
      if (j >= i) ++j;
      if (rng_.below(2))
        slots_[i] = slots_[i] * slots_[j];
      else
        slots_[i] = slots_[i] * slots_[j].inverse();
      return slots_[i];
    }
    std::vector<Perm> slots_;
    Rng rng_;
  };

  RandomStream random_stream(std::uint64_t seed) const { return RandomStream(gens_, seed); }

  /// Visits every element exactly once (intended for small groups).
  void for_each_element(const std::function<void(const Perm&)>& fn) const {
    ensure_chain();
    std::vector<Pt> e(degree_);
    for (Pt x = 0; x < degree_; ++x) e[x] = x;
    enumerate_rec(0, e, fn);
  }

  /// Orbit of a point under the whole group.
  OrbitData point_orbit(Pt start) const { return orbit(gens_, start, degree_); }

 private:
  struct Level {
    Pt base = 0;
    std::vector<std::int32_t> gen_ids;    // pool ids, direct and inverse
    std::vector<Pt> orbit;
    std::vector<std::int32_t> pos;        // point -> orbit index or -1
    std::vector<std::int32_t> via;        // point -> pool id of tree edge
    std::vector<Pt> from;                 // point -> predecessor
    std::size_t done_pts = 0;             // verified rectangle
    std::size_t done_gens = 0;
  };

  static bool is_id(const std::vector<Pt>& v) {
    for (Pt i = 0; i < v.size(); ++i)
      if (v[i] != i) return false;
    return true;
  }

  void ensure_chain() const {
    if (!chain_built_) build_chain(nullptr);
  }

  // --- pool ---------------------------------------------------------------
  std::int32_t pool_add(const Perm& g) const {
    pool_.push_back(g.images());
    pool_.push_back(g.inverse().images());
    return static_cast<std::int32_t>(pool_.size()) - 2;
  }

  // --- per-level orbit maintenance -----------------------------------------
  void level_init(Level& lv, Pt base) const {
    lv.base = base;
    lv.orbit.assign(1, base);
    lv.pos.assign(degree_, -1);
    lv.via.assign(degree_, -1);
    lv.from.assign(degree_, 0);
    lv.pos[base] = 0;
    lv.done_pts = lv.done_gens = 0;
  }

  void level_close_orbit(Level& lv) const {
    for (std::size_t qi = 0; qi < lv.orbit.size(); ++qi) {
      Pt p = lv.orbit[qi];
      for (std::int32_t id : lv.gen_ids) {
        Pt q = pool_[id][p];
        if (lv.pos[q] < 0) {
          lv.pos[q] = static_cast<std::int32_t>(lv.orbit.size());
          lv.via[q] = id;
          lv.from[q] = p;
          lv.orbit.push_back(q);
        }
      }
    }
  }

  // u with base^u = target, materialized as a full image array
  void materialize_transversal(std::size_t level, Pt target, std::vector<Pt>& u) const {
    const Level& lv = levels_[level];
    path_buf_.clear();
    for (Pt p = target; p != lv.base; p = lv.from[p]) path_buf_.push_back(lv.via[p]);
    for (Pt x = 0; x < degree_; ++x) u[x] = x;
    for (auto it = path_buf_.rbegin(); it != path_buf_.rend(); ++it) {
      const Pt* g = pool_[*it].data();
      for (Pt x = 0; x < degree_; ++x) u[x] = g[u[x]];
    }
  }

  // work := work * u_{beta}^{-1} at the given level, where beta = work[base]
  void apply_transversal_inverse(std::size_t level, Pt beta, std::vector<Pt>& work) const {
    const Level& lv = levels_[level];
    path_buf_.clear();
    for (Pt p = beta; p != lv.base; p = lv.from[p]) path_buf_.push_back(lv.via[p]);
    for (std::int32_t id : path_buf_) {
      const Pt* gi = pool_[id ^ 1].data();
      for (Pt x = 0; x < degree_; ++x) work[x] = gi[work[x]];
    }
  }

  // sifts `work` through levels starting at `from`; returns the level index
  // where the base image left the basic orbit (or levels_.size() if the walk
  // completed; the residue then fixes every base point but may be nontrivial)
  int sift_inplace(std::vector<Pt>& work, std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      Pt beta = work[levels_[i].base];
      if (levels_[i].pos[beta] < 0) return static_cast<int>(i);
      if (beta != levels_[i].base) apply_transversal_inverse(i, beta, work);
    }
    return static_cast<int>(levels_.size());
  }

  // --- base selection: caller hints first, then the first moved point ------
  Pt pick_base_point(const std::function<bool(Pt)>& moved) const {
    for (Pt h : base_hint_) {
      bool used = false;
      for (const auto& lv : levels_)
        if (lv.base == h) used = true;
      if (!used && moved(h)) return h;
    }
    for (Pt i = 0; i < degree_; ++i)
      if (moved(i)) return i;
    throw std::logic_error("PermGroup: no moved point for base selection");
  }

  void append_level(const std::vector<Pt>& residue) const {
    Pt b = pick_base_point([&](Pt p) { return residue[p] != p; });
    levels_.emplace_back();
    level_init(levels_.back(), b);
  }

  // registers a residue as a strong generator; returns its drop level.
  // `work` must be a nontrivial member fixing base[0..from-1].
  std::size_t add_strong_generator(std::vector<Pt> work, std::size_t drop) const {
    if (drop == levels_.size()) append_level(work);
    std::int32_t id = pool_add(Perm(std::move(work)));
    const std::vector<Pt>& g = pool_[id];
    std::size_t lo = 0;
    while (lo < levels_.size() && g[levels_[lo].base] == levels_[lo].base) ++lo;
    if (lo >= levels_.size()) throw std::logic_error("PermGroup: strong generator fixes all base points");
    // attach to every level whose base prefix it fixes, root level included
    // only when it actually generates there (level 0 keeps the input set)
    for (std::size_t j = 1; j <= lo; ++j) {
      levels_[j].gen_ids.push_back(id);
      levels_[j].gen_ids.push_back(id ^ 1);
      level_close_orbit(levels_[j]);
    }
    if (lo == 0) {
      levels_[0].gen_ids.push_back(id);
      levels_[0].gen_ids.push_back(id ^ 1);
      level_close_orbit(levels_[0]);
    }
    return lo;
  }

  Bigint orbit_product() const {
    Bigint n = 1;
    for (const auto& lv : levels_) n *= static_cast<std::uint64_t>(lv.orbit.size());
    return n;
  }

  // --- chain construction ----------------------------------------------------
  void build_chain(const Bigint* order_target) const {
    pool_.clear();
    levels_.clear();
    // level 0: input generators
    std::vector<std::int32_t> root_ids;
    for (const Perm& g : gens_) {
      if (g.is_identity()) continue;
      root_ids.push_back(pool_add(g));
    }
    if (root_ids.empty()) {  // trivial group
      chain_built_ = true;
      order_ = 1;
      return;
    }
    Pt b0 = pick_base_point([&](Pt p) {
      for (std::int32_t id : root_ids)
        if (pool_[id][p] != p) return true;
      return false;
    });
    levels_.emplace_back();
    level_init(levels_[0], b0);
    for (std::int32_t id : root_ids) {
      levels_[0].gen_ids.push_back(id);
      levels_[0].gen_ids.push_back(id ^ 1);
    }
    level_close_orbit(levels_[0]);

    auto feed = [&](const Perm& cand) -> bool {  // true if it extended the chain
      std::vector<Pt> work = cand.images();
      int drop = sift_inplace(work, 0);
      if (drop == static_cast<int>(levels_.size()) && is_id(work)) return false;
      add_strong_generator(std::move(work), static_cast<std::size_t>(drop));
      return true;
    };

    // seed the deeper levels with the input generators themselves
    for (const Perm& g : gens_) feed(g);

    // seeded preload: random elements until the stream stops contributing
    RandomStream stream(gens_, config().seed ^ (0xC0FFEEULL + degree_));
    int quiet = 0;
    const int target_quiet = 24;
    while (quiet < target_quiet) {
      if (order_target && orbit_product() == *order_target) {
        chain_built_ = true;
        order_ = *order_target;
        return;  // lower bound matches a trusted order: chain is complete
      }
      if (feed(stream.next()))
        quiet = 0;
      else
        ++quiet;
    }

    // systematic Schreier sweep; verified (point, generator) pairs stay
    // verified because subchain groups only ever grow.
    std::size_t i = levels_.size();
    while (i-- > 0) {
      Level* lv = &levels_[i];
      bool fail = false;
      while (lv->done_pts < lv->orbit.size() || lv->done_gens < lv->gen_ids.size()) {
        if (order_target && orbit_product() == *order_target) {
          chain_built_ = true;
          order_ = *order_target;
          return;
        }
        // grow the verified rectangle one row or column at a time
        std::size_t restart_level = levels_.size();
        if (lv->done_gens < lv->gen_ids.size()) {
          std::size_t gi = lv->done_gens;
          for (std::size_t pi = 0; pi < lv->done_pts && !fail; ++pi)
            fail = process_schreier(i, pi, gi, &restart_level);
          if (!fail) lv->done_gens = gi + 1;
        } else {
          std::size_t pi = lv->done_pts;
          for (std::size_t gi = 0; gi < lv->done_gens && !fail; ++gi)
            fail = process_schreier(i, pi, gi, &restart_level);
          if (!fail) lv->done_pts = pi + 1;
        }
        if (fail) {
          i = restart_level;
          lv = &levels_[i];
          fail = false;
        }
      }
    }
    chain_built_ = true;
    order_ = orbit_product();
  }

  // Schreier generator for (orbit point pi, direct generator slot gi) at
  // level i, sifted through the subchain.  On a nontrivial residue, records
  // it and reports the level at which the sweep must resume.
  bool process_schreier(std::size_t i, std::size_t pi, std::size_t gi, std::size_t* restart) const {
    const Level& lv = levels_[i];
    std::int32_t id = lv.gen_ids[gi];
    if (id % 2) return false;  // inverses contribute nothing new
    Pt p = lv.orbit[pi];
    const Pt* g = pool_[id].data();
    Pt q = g[p];
    if (lv.via[q] == id && lv.from[q] == p) return false;  // tree edge
    buf_u_.resize(degree_);
    buf_s_.resize(degree_);
    materialize_transversal(i, p, buf_u_);
    for (Pt x = 0; x < degree_; ++x) buf_s_[x] = g[buf_u_[x]];
    apply_transversal_inverse(i, q, buf_s_);
    int drop = sift_inplace(buf_s_, i + 1);
    if (drop == static_cast<int>(levels_.size()) && is_id(buf_s_)) return false;
    *restart = add_strong_generator(buf_s_, static_cast<std::size_t>(drop));
    return true;
  }

  void enumerate_rec(std::size_t level, std::vector<Pt>& e,
                     const std::function<void(const Perm&)>& fn) const {
    if (level == levels_.size()) {
      fn(Perm(e));
      return;
    }
    std::vector<Pt> u(degree_), next(degree_);
    for (Pt beta : levels_[level].orbit) {
      materialize_transversal(level, beta, u);
      // accumulate as u * e so deeper factors apply first
      for (Pt x = 0; x < degree_; ++x) next[x] = e[u[x]];
      enumerate_rec(level + 1, next, fn);
    }
  }

  Pt degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Pt> base_hint_;

  mutable bool chain_built_ = false;
  mutable Bigint order_ = 0;
  mutable std::vector<std::vector<Pt>> pool_;
  mutable std::vector<Level> levels_;
  mutable std::vector<std::int32_t> path_buf_;
  mutable std::vector<Pt> buf_u_, buf_s_;
};

/// Group fixture format: "degree n" header, then one generator per line in
/// the one-line image-list format.
inline void write_group_fixture(std::ostream& os, const PermGroup& g) {
  os << "degree " << g.degree() << "\n";
  for (const Perm& p : g.generators()) os << p.text() << "\n";
}

inline PermGroup read_group_fixture(std::istream& is) {
  std::string word;
  Pt degree = 0;
  if (!(is >> word) || word != "degree" || !(is >> degree))
    throw invalid_argument_error("read_group_fixture: expected 'degree n'");
  std::string line;
  std::getline(is, line);
  std::vector<Perm> gens;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    gens.push_back(Perm::parse(line, degree));
  }
  return PermGroup(degree, gens);
}

/// Deterministic seeded search for an element of exact order n (as a power
/// of a stream element whose order is divisible by n).
inline Perm find_element_of_order(const PermGroup& g, std::uint64_t n, std::uint64_t seed,
                                  int budget = 20000) {
  auto stream = g.random_stream(seed);
  for (int tries = 0; tries < budget; ++tries) {
    Perm x = stream.next();
    std::uint64_t o = x.order();
    if (o % n != 0) continue;
    Perm y = x;
    for (std::uint64_t i = 1; i < o / n; ++i) y = y * x;
    if (y.order() == n) return y;
  }
  throw search_failure_error("find_element_of_order: retry budget exhausted");
}

}  // namespace gqx

#endif  // GQX_PERMGROUP_HPP_
