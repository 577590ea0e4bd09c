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
#ifndef GQX_PERM_HPP_
#define GQX_PERM_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "gqx/common.hpp"

namespace gqx {

/// Permutation of {0,...,n-1} as an image array.  Products compose left to
/// right: p^(g*h) = (p^g)^h.
class Perm {
 public:
  Perm() = default;
  explicit Perm(Pt degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), Pt{0});
  }
  explicit Perm(std::vector<Pt> images) : img_(std::move(images)) {
    if (!is_bijection()) throw invalid_argument_error("Perm: image array is not a bijection");
  }

  Pt degree() const { return static_cast<Pt>(img_.size()); }
  Pt operator[](Pt p) const { return img_[p]; }
  const std::vector<Pt>& images() const { return img_; }

  bool is_identity() const {
    for (Pt i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Perm operator*(const Perm& o) const {
    if (degree() != o.degree()) throw invalid_argument_error("Perm: degree mismatch");
    Perm r;
    r.img_.resize(img_.size());
    for (Pt i = 0; i < degree(); ++i) r.img_[i] = o.img_[img_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (Pt i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
    return r;
  }

  Perm conjugate_by(const Perm& g) const {  // g^-1 * this * g
    Perm r;
    r.img_.resize(img_.size());
    Perm gi = g.inverse();
    for (Pt i = 0; i < degree(); ++i) r.img_[i] = g.img_[img_[gi.img_[i]]];
    return r;
  }

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }

  /// Order as lcm of cycle lengths.  Throws on (absurdly) overflowing orders.
  std::uint64_t order() const {
    std::vector<bool> seen(img_.size(), false);
    std::uint64_t ord = 1;
    for (Pt i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      Pt j = i;
      do {
        seen[j] = true;
        j = img_[j];
        ++len;
      } while (j != i);
      std::uint64_t g = std::gcd(ord, len);
      if (ord / g > UINT64_MAX / len) throw std::overflow_error("Perm: order overflow");
      ord = ord / g * len;
    }
    return ord;
  }

  std::vector<Pt> fixed_points() const {
    std::vector<Pt> out;
    for (Pt i = 0; i < degree(); ++i)
      if (img_[i] == i) out.push_back(i);
    return out;
  }

  Pt first_moved() const {  // degree() when identity
    for (Pt i = 0; i < degree(); ++i)
      if (img_[i] != i) return i;
    return degree();
  }

  /// One-line image list: "3 0 2 1".
  std::string text() const {
    std::ostringstream os;
    for (Pt i = 0; i < degree(); ++i) {
      if (i) os << ' ';
      os << img_[i];
    }
    return os.str();
  }

  static Perm parse(const std::string& line, Pt degree) {
    std::istringstream is(line);
    std::vector<Pt> v(degree);
    for (Pt i = 0; i < degree; ++i)
      if (!(is >> v[i]) || v[i] >= degree) throw invalid_argument_error("Perm: bad image list");
    return Perm(std::move(v));
  }

  /// Build from cycles, e.g. {{0,1,2},{3,4}} on the given degree.
  static Perm from_cycles(Pt degree, const std::vector<std::vector<Pt>>& cycles) {
    std::vector<Pt> v(degree);
    std::iota(v.begin(), v.end(), Pt{0});
    for (const auto& cyc : cycles)
      for (std::size_t i = 0; i < cyc.size(); ++i) v[cyc[i]] = cyc[(i + 1) % cyc.size()];
    return Perm(std::move(v));
  }

 private:
  bool is_bijection() const {
    std::vector<bool> seen(img_.size(), false);
    for (Pt v : img_) {
      if (v >= img_.size() || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }

  std::vector<Pt> img_;
};

/// splitmix64: tiny deterministic generator for seeded searches.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace gqx

#endif  // GQX_PERM_HPP_
