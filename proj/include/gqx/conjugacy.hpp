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
#ifndef GQX_CONJUGACY_HPP_
#define GQX_CONJUGACY_HPP_

#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

#include "gqx/common.hpp"
#include "gqx/perm.hpp"
#include "gqx/permgroup.hpp"

namespace gqx {

/// Open-addressing map from 64-bit fingerprints to element indices.
/// Keys are stored shifted by one so zero marks an empty slot.
class FpMap {
 public:
  explicit FpMap(std::size_t expected = 0) {
    std::size_t cap = 64;
    while (cap * 10 < expected * 16) cap <<= 1;
    slots_.assign(cap, 0);
    vals_.assign(cap, 0);
  }

  std::size_t size() const { return count_; }
  std::size_t capacity_bytes() const { return slots_.size() * 12; }

  bool insert(std::uint64_t key, std::uint32_t val) {
    if ((count_ + 1) * 16 > slots_.size() * 10) grow();
    return insert_nogrow(key + 1, val);
  }

  std::optional<std::uint32_t> find(std::uint64_t key) const {
    std::uint64_t k = key + 1;
    std::size_t mask = slots_.size() - 1;
    for (std::size_t i = hash(k) & mask;; i = (i + 1) & mask) {
      if (slots_[i] == 0) return std::nullopt;
      if (slots_[i] == k) return vals_[i];
    }
  }

 private:
  static std::uint64_t hash(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  bool insert_nogrow(std::uint64_t k, std::uint32_t val) {
    std::size_t mask = slots_.size() - 1;
    for (std::size_t i = hash(k) & mask;; i = (i + 1) & mask) {
      if (slots_[i] == k) return false;
      if (slots_[i] == 0) {
        slots_[i] = k;
        vals_[i] = val;
        ++count_;
        return true;
      }
    }
  }

  void grow() {
    std::vector<std::uint64_t> oldk = std::move(slots_);
    std::vector<std::uint32_t> oldv = std::move(vals_);
    slots_.assign(oldk.size() * 2, 0);
    vals_.assign(oldk.size() * 2, 0);
    count_ = 0;
    for (std::size_t i = 0; i < oldk.size(); ++i)
      if (oldk[i]) insert_nogrow(oldk[i], oldv[i]);
  }

  std::vector<std::uint64_t> slots_;
  std::vector<std::uint32_t> vals_;
  std::size_t count_ = 0;
};

/// Conjugacy class of x in G, enumerated by breadth-first conjugation
/// closure.  Elements are identified by their base-image fingerprints and
/// stored as a Schreier tree (parent index plus conjugating label), about 13
/// bytes per element beside the hash map, so classes in the millions stay
/// within a few hundred megabytes.  Any member and any conjugating witness
/// can be reconstructed on demand.  Enumeration order is deterministic
/// (FIFO, labels in generator order, inverses interleaved).
class ConjClass {
 public:
  ConjClass(const PermGroup& g, Perm x,
            std::uint64_t memory_cap = config().memory_cap_bytes,
            std::size_t expected_size = 0)
      : g_(&g), rep_(std::move(x)), base_(g.base()) {
    if (!g.contains(rep_)) throw invalid_argument_error("ConjClass: representative not in group");
    bits_ = 1;
    while ((1u << bits_) < g.degree()) ++bits_;
    if (bits_ * base_.size() > 64)
      throw invalid_argument_error("ConjClass: fingerprint exceeds 64 bits");
    for (const Perm& gen : g.generators()) {
      labels_.push_back(gen.images());
      labels_.push_back(gen.inverse().images());
    }
    if (labels_.size() > 255) throw invalid_argument_error("ConjClass: too many generators");
    enumerate(memory_cap, expected_size);
  }

  const PermGroup& group() const { return *g_; }
  const Perm& representative() const { return rep_; }
  std::size_t size() const { return parent_.size(); }

  /// Exact centralizer order |G| / |x^G|; the division is checked.
  Bigint centralizer_order() const {
    Bigint o = g_->order();
    Bigint s = static_cast<std::uint64_t>(size());
    if (o % s != 0) throw std::logic_error("ConjClass: class size does not divide group order");
    return o / s;
  }

  std::uint64_t fingerprint(const Perm& y) const {
    std::uint64_t fp = 0;
    for (Pt b : base_) fp = (fp << bits_) | y[b];
    return fp;
  }

  /// Membership for y known to lie in G.
  bool contains(const Perm& y) const { return map_.find(fingerprint(y)).has_value(); }
  bool contains_fp(std::uint64_t fp) const { return map_.find(fp).has_value(); }
  std::optional<std::uint32_t> find(const Perm& y) const { return map_.find(fingerprint(y)); }

  /// x is real iff its inverse lies in its own class.
  bool is_real() const { return contains(rep_.inverse()); }

  Perm element(std::uint32_t idx) const { return rep_.conjugate_by(witness(idx)); }

  /// A witness w with rep^w = element(idx).
  Perm witness(std::uint32_t idx) const {
    Pt n = g_->degree();
    std::vector<Pt> img(n);
    materialize_witness(idx, img);
    return Perm(std::move(img));
  }

  /// Generators of C_G(x), harvested deterministically from closed edges of
  /// the class graph (Schreier's lemma on the conjugation action) until the
  /// subgroup order reaches |G| / |x^G|, which certifies completeness.
  PermGroup centralizer_subgroup() const {
    Bigint target = centralizer_order();
    Pt n = g_->degree();
    if (target == 1) return PermGroup(n, {Perm(n)});
    std::vector<Perm> cgens;
    std::optional<PermGroup> c;
    std::vector<Pt> wi(n), cand(n);
    std::size_t next_attempt = 8;
    for (std::uint32_t idx = 0; idx < size(); ++idx) {
      collect_chain(idx);
      bool wi_ready = false;
      for (std::size_t li = 0; li < labels_.size(); ++li) {
        std::uint64_t fp = conjugate_fp(li);
        std::uint32_t j = *map_.find(fp);
        if (j != 0 && parent_[j] == idx && edge_[j] == li) continue;  // tree edge
        if (!wi_ready) {
          materialize_witness(idx, wi);
          wi_ready = true;
        }
        const Pt* lab = labels_[li].data();
        for (Pt p = 0; p < n; ++p) cand[p] = lab[wi[p]];
        apply_witness_inverse(j, cand);
        Perm s(cand);
        if (s.is_identity()) continue;
        bool dup = false;
        for (const Perm& old : cgens)
          if (old == s) dup = true;
        if (dup || (c && c->contains(s))) continue;
        cgens.push_back(s);
        if (cgens.size() >= next_attempt) {
          next_attempt *= 4;
          PermGroup attempt(n, cgens);
          bool reached = true;
          try {
            attempt.build_with_order_target(target);
          } catch (const invalid_argument_error&) {
            reached = false;
          }
          if (reached) return attempt;
          c.emplace(std::move(attempt));  // not there yet; keep scanning
          collect_chain(idx);
        }
      }
    }
    // final attempt with everything the scan produced
    PermGroup attempt(n, cgens);
    attempt.build_with_order_target(target);
    return attempt;
  }

 private:
  void collect_chain(std::uint32_t idx) const {
    chain_.clear();
    for (std::uint32_t i = idx; i != 0; i = parent_[i]) chain_.push_back(edge_[i]);
  }

  // fingerprint of element(idx) conjugated by label li; chain_ must hold idx
  std::uint64_t conjugate_fp(std::size_t li) const {
    const Pt* lab = labels_[li].data();
    const Pt* labinv = labels_[li ^ 1].data();
    std::uint64_t fp = 0;
    for (Pt b : base_) {
      Pt p = labinv[b];
      for (std::uint8_t e : chain_) p = labels_[e ^ 1][p];
      p = rep_[p];
      for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) p = labels_[*it][p];
      p = lab[p];
      fp = (fp << bits_) | p;
    }
    return fp;
  }

  void enumerate(std::uint64_t memory_cap, std::size_t expected) {
    map_ = FpMap(expected);
    map_.insert(fingerprint(rep_), 0);
    parent_.push_back(0);
    edge_.push_back(0);
    for (std::uint32_t idx = 0; idx < parent_.size(); ++idx) {
      collect_chain(idx);
      for (std::size_t li = 0; li < labels_.size(); ++li) {
        std::uint64_t fp = conjugate_fp(li);
        if (map_.find(fp)) continue;
        std::uint64_t footprint = map_.capacity_bytes() + parent_.size() * 13;
        if (footprint > memory_cap) {
          std::ostringstream os;
          os << "ConjClass: memory cap exceeded after " << parent_.size()
             << " elements (footprint " << footprint << " bytes, cap " << memory_cap << ")";
          throw resource_cap_error(os.str());
        }
        map_.insert(fp, static_cast<std::uint32_t>(parent_.size()));
        parent_.push_back(idx);
        edge_.push_back(static_cast<std::uint8_t>(li));
      }
    }
  }

  void materialize_witness(std::uint32_t idx, std::vector<Pt>& img) const {
    chain_.clear();
    for (std::uint32_t i = idx; i != 0; i = parent_[i]) chain_.push_back(edge_[i]);
    Pt n = g_->degree();
    for (Pt p = 0; p < n; ++p) img[p] = p;
    for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) {
      const Pt* lab = labels_[*it].data();
      for (Pt p = 0; p < n; ++p) img[p] = lab[img[p]];
    }
  }

  void apply_witness_inverse(std::uint32_t idx, std::vector<Pt>& img) const {
    Pt n = g_->degree();
    for (std::uint32_t i = idx; i != 0; i = parent_[i]) {
      const Pt* labinv = labels_[edge_[i] ^ 1].data();
      for (Pt p = 0; p < n; ++p) img[p] = labinv[img[p]];
    }
  }

  const PermGroup* g_;
  Perm rep_;
  std::vector<Pt> base_;
  unsigned bits_ = 0;
  std::vector<std::vector<Pt>> labels_;
  FpMap map_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> edge_;
  mutable std::vector<std::uint8_t> chain_;
};

}  // namespace gqx

#endif  // GQX_CONJUGACY_HPP_
