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
#ifndef GQX_GROUPZOO_HPP_
#define GQX_GROUPZOO_HPP_

#include <cstdint>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "gqx/conjugacy.hpp"
#include "gqx/field.hpp"
#include "gqx/perm.hpp"
#include "gqx/permgroup.hpp"

namespace gqx {

/// Recipe for an abstract group realized as a faithful permutation group.
///
/// Grammar (round-trippable):
///   C(n) | D(n) | E(p,k) | PSL(2,q) | direct(r1,r2,...)
///   | semidirect(N,C(k),auto=i0 i1 ... )
///
/// The semidirect automorphism is given concretely as the image list of the
/// acting generator on N's realized domain; realize() verifies it normalizes
/// N and has the advertised order.
struct Recipe {
  enum class Kind { Cyclic, Dihedral, ElementaryAbelian, Psl2, Direct, Semidirect };
  Kind kind = Kind::Cyclic;
  std::uint64_t n = 0;           // C(n), D(n); p for E(p,k); q for PSL(2,q)
  std::uint64_t k = 0;           // E(p,k); cyclic order of the semidirect complement
  std::vector<Recipe> parts;     // direct factors / [N] of a semidirect
  std::vector<Pt> action_images; // semidirect: images of N's domain
};

inline Bigint recipe_order(const Recipe& r) {
  switch (r.kind) {
    case Recipe::Kind::Cyclic: return r.n;
    case Recipe::Kind::Dihedral: return 2 * Bigint(r.n);
    case Recipe::Kind::ElementaryAbelian: {
      Bigint o = 1;
      for (std::uint64_t i = 0; i < r.k; ++i) o *= r.n;
      return o;
    }
    case Recipe::Kind::Psl2: {
      Bigint q = r.n;
      return q * (q * q - 1) / std::gcd<std::uint64_t>(2, r.n - 1);
    }
    case Recipe::Kind::Direct: {
      Bigint o = 1;
      for (const Recipe& p : r.parts) o *= recipe_order(p);
      return o;
    }
    case Recipe::Kind::Semidirect:
      return recipe_order(r.parts[0]) * r.k;
  }
  throw std::logic_error("recipe_order: bad kind");
}

inline Pt recipe_degree(const Recipe& r) {
  switch (r.kind) {
    case Recipe::Kind::Cyclic: return static_cast<Pt>(r.n);
    case Recipe::Kind::Dihedral: return static_cast<Pt>(r.n);
    case Recipe::Kind::ElementaryAbelian: {
      Pt d = 1;
      for (std::uint64_t i = 0; i < r.k; ++i) d *= static_cast<Pt>(r.n);
      return d;
    }
    case Recipe::Kind::Psl2: return static_cast<Pt>(r.n + 1);
    case Recipe::Kind::Direct: {
      Pt d = 0;
      for (const Recipe& p : r.parts) d += recipe_degree(p);
      return d;
    }
    case Recipe::Kind::Semidirect: return recipe_degree(r.parts[0]);
  }
  throw std::logic_error("recipe_degree: bad kind");
}

/// PSL(2,q) on the projective line, q a power of 2 or 3, q >= 4.
/// Domain: field encodings 0..q-1, then infinity at index q.
inline PermGroup psl2(unsigned q) {
  unsigned p = q % 2 == 0 ? 2 : 3;
  unsigned k = 0;
  for (unsigned v = 1; v < q; v *= p) ++k;
  Field::Ref f;
  try {
    f = Field::make(p, k);
  } catch (const invalid_argument_error&) {
    throw invalid_argument_error("psl2: unsupported q");
  }
  if (f->size() != q || q < 4) throw invalid_argument_error("psl2: unsupported q");
  Pt inf = q;
  auto make = [&](auto&& mob) {
    std::vector<Pt> img(q + 1);
    for (Pt x = 0; x <= q; ++x) img[x] = mob(x);
    return Perm(std::move(img));
  };
  Perm t = make([&](Pt x) { return x == inf ? inf : static_cast<Pt>(f->add(x, 1)); });
  unsigned kap = f->primitive_element();
  unsigned mult = (p == 2) ? kap : f->mul(kap, kap);
  Perm m = make([&](Pt x) { return x == inf ? inf : static_cast<Pt>(f->mul(mult, x)); });
  Perm i = make([&](Pt x) {
    if (x == inf) return Pt{0};
    if (x == 0) return inf;
    return static_cast<Pt>(p == 2 ? f->inv(x) : f->neg(f->inv(x)));
  });
  return PermGroup(q + 1, {t, m, i});
}

inline PermGroup realize(const Recipe& r);

namespace detail {

inline std::vector<Perm> realize_gens(const Recipe& r, Pt offset, Pt total) {
  auto shift = [&](const std::vector<Pt>& local) {
    std::vector<Pt> img(total);
    for (Pt i = 0; i < total; ++i) img[i] = i;
    for (Pt i = 0; i < local.size(); ++i) img[offset + i] = offset + local[i];
    return Perm(std::move(img));
  };
  std::vector<Perm> out;
  switch (r.kind) {
    case Recipe::Kind::Cyclic: {
      if (r.n < 1) throw invalid_argument_error("realize: C(n) needs n >= 1");
      std::vector<Pt> rot(r.n);
      for (Pt i = 0; i < r.n; ++i) rot[i] = (i + 1) % r.n;
      out.push_back(shift(rot));
      break;
    }
    case Recipe::Kind::Dihedral: {
      if (r.n < 3) throw invalid_argument_error("realize: D(n) needs n >= 3");
      std::vector<Pt> rot(r.n), ref(r.n);
      for (Pt i = 0; i < r.n; ++i) {
        rot[i] = (i + 1) % r.n;
        ref[i] = (r.n - i) % r.n;
      }
      out.push_back(shift(rot));
      out.push_back(shift(ref));
      break;
    }
    case Recipe::Kind::ElementaryAbelian: {
      if (r.n != 2 && r.n != 3) throw invalid_argument_error("realize: E(p,k) needs p in {2,3}");
      Pt deg = recipe_degree(r);
      Pt step = 1;
      for (std::uint64_t b = 0; b < r.k; ++b) {
        std::vector<Pt> tr(deg);
        for (Pt x = 0; x < deg; ++x) {
          // add 1 in digit b, base p
          Pt digit = (x / step) % static_cast<Pt>(r.n);
          tr[x] = x + ((digit + 1) % r.n - digit) * step;
        }
        out.push_back(shift(tr));
        step *= static_cast<Pt>(r.n);
      }
      break;
    }
    case Recipe::Kind::Psl2: {
      PermGroup g = psl2(static_cast<unsigned>(r.n));
      for (const Perm& gen : g.generators()) out.push_back(shift(gen.images()));
      break;
    }
    case Recipe::Kind::Direct: {
      Pt off = offset;
      for (const Recipe& part : r.parts) {
        auto sub = realize_gens(part, off, total);
        out.insert(out.end(), sub.begin(), sub.end());
        off += recipe_degree(part);
      }
      break;
    }
    case Recipe::Kind::Semidirect: {
      out = realize_gens(r.parts[0], offset, total);
      if (r.action_images.size() != recipe_degree(r.parts[0]))
        throw invalid_argument_error("realize: automorphism image list has wrong length");
      out.push_back(shift(r.action_images));
      break;
    }
  }
  return out;
}

}  // namespace detail

/// Realizes the recipe faithfully and checks the arithmetic order exactly.
inline PermGroup realize(const Recipe& r) {
  Pt total = recipe_degree(r);
  std::vector<Perm> gens = detail::realize_gens(r, 0, total);
  if (r.kind == Recipe::Kind::Semidirect) {
    // verify the automorphism: normalizes N, and its order divides the
    // cyclic factor (equality is implied by the realized order check)
    PermGroup n(total, detail::realize_gens(r.parts[0], 0, total));
    const Perm& c = gens.back();
    if (c.order() != r.k)
      throw invalid_argument_error("realize: acting generator order mismatch");
    for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
      if (!n.contains(gens[i].conjugate_by(c)))
        throw invalid_argument_error("realize: action does not normalize the kernel");
    }
  }
  PermGroup g(total, gens);
  if (g.order() != recipe_order(r))
    throw invalid_argument_error("realize: realized order disagrees with the recipe");
  return g;
}

// ---- recipe grammar -------------------------------------------------------

inline std::string recipe_text(const Recipe& r) {
  std::ostringstream os;
  switch (r.kind) {
    case Recipe::Kind::Cyclic: os << "C(" << r.n << ")"; break;
    case Recipe::Kind::Dihedral: os << "D(" << r.n << ")"; break;
    case Recipe::Kind::ElementaryAbelian: os << "E(" << r.n << "," << r.k << ")"; break;
    case Recipe::Kind::Psl2: os << "PSL(2," << r.n << ")"; break;
    case Recipe::Kind::Direct: {
      os << "direct(";
      for (std::size_t i = 0; i < r.parts.size(); ++i) {
        if (i) os << ",";
        os << recipe_text(r.parts[i]);
      }
      os << ")";
      break;
    }
    case Recipe::Kind::Semidirect: {
      os << "semidirect(" << recipe_text(r.parts[0]) << ",C(" << r.k << "),auto=";
      for (std::size_t i = 0; i < r.action_images.size(); ++i) {
        if (i) os << " ";
        os << r.action_images[i];
      }
      os << ")";
      break;
    }
  }
  return os.str();
}

namespace detail {

inline Recipe parse_recipe_at(const std::string& s, std::size_t& pos);

inline void expect(const std::string& s, std::size_t& pos, char c) {
  if (pos >= s.size() || s[pos] != c)
    throw invalid_argument_error("recipe parse: expected '" + std::string(1, c) + "'");
  ++pos;
}

inline std::uint64_t parse_int(const std::string& s, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (start == pos) throw invalid_argument_error("recipe parse: expected integer");
  return std::stoull(s.substr(start, pos - start));
}

inline Recipe parse_recipe_at(const std::string& s, std::size_t& pos) {
  auto starts = [&](const char* w) {
    return s.compare(pos, std::string(w).size(), w) == 0;
  };
  Recipe r;
  if (starts("C(")) {
    pos += 2;
    r.kind = Recipe::Kind::Cyclic;
    r.n = parse_int(s, pos);
    expect(s, pos, ')');
  } else if (starts("D(")) {
    pos += 2;
    r.kind = Recipe::Kind::Dihedral;
    r.n = parse_int(s, pos);
    expect(s, pos, ')');
  } else if (starts("E(")) {
    pos += 2;
    r.kind = Recipe::Kind::ElementaryAbelian;
    r.n = parse_int(s, pos);
    expect(s, pos, ',');
    r.k = parse_int(s, pos);
    expect(s, pos, ')');
  } else if (starts("PSL(2,")) {
    pos += 6;
    r.kind = Recipe::Kind::Psl2;
    r.n = parse_int(s, pos);
    expect(s, pos, ')');
  } else if (starts("direct(")) {
    pos += 7;
    r.kind = Recipe::Kind::Direct;
    r.parts.push_back(parse_recipe_at(s, pos));
    while (pos < s.size() && s[pos] == ',') {
      ++pos;
      r.parts.push_back(parse_recipe_at(s, pos));
    }
    expect(s, pos, ')');
  } else if (starts("semidirect(")) {
    pos += 11;
    r.kind = Recipe::Kind::Semidirect;
    r.parts.push_back(parse_recipe_at(s, pos));
    expect(s, pos, ',');
    if (!starts("C(")) throw invalid_argument_error("recipe parse: semidirect complement must be cyclic");
    pos += 2;
    r.k = parse_int(s, pos);
    expect(s, pos, ')');
    expect(s, pos, ',');
    if (s.compare(pos, 5, "auto=") != 0) throw invalid_argument_error("recipe parse: expected auto=");
    pos += 5;
    while (pos < s.size() && s[pos] != ')') {
      if (s[pos] == ' ') {
        ++pos;
        continue;
      }
      r.action_images.push_back(static_cast<Pt>(parse_int(s, pos)));
    }
    expect(s, pos, ')');
  } else {
    throw invalid_argument_error("recipe parse: unknown constructor at '" + s.substr(pos, 8) + "'");
  }
  return r;
}

}  // namespace detail

inline Recipe parse_recipe(const std::string& s) {
  std::size_t pos = 0;
  Recipe r = detail::parse_recipe_at(s, pos);
  if (pos != s.size()) throw invalid_argument_error("recipe parse: trailing text");
  return r;
}

// ---- model factories ------------------------------------------------------

/// Least unit of multiplicative order k modulo n; throws if none exists.
inline std::uint64_t least_unit_of_order(std::uint64_t n, std::uint64_t k) {
  for (std::uint64_t u = 2; u < n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    std::uint64_t v = u % n, ord = 1;
    while (v != 1) {
      v = (v * u) % n;
      ++ord;
      if (ord > k) break;
    }
    if (ord == k) return u;
  }
  throw invalid_argument_error("least_unit_of_order: no unit of the requested order");
}

/// C_n : C_k acting on n points, the complement acting as the least unit of
/// order k.
inline Recipe frobenius_recipe(std::uint64_t n, std::uint64_t k) {
  Recipe r;
  r.kind = Recipe::Kind::Semidirect;
  Recipe base;
  base.kind = Recipe::Kind::Cyclic;
  base.n = n;
  r.parts.push_back(base);
  r.k = k;
  std::uint64_t u = least_unit_of_order(n, k);
  r.action_images.resize(n);
  for (Pt i = 0; i < n; ++i) r.action_images[i] = static_cast<Pt>((u * i) % n);
  return r;
}

/// (E4 x D(d)) : C3 on 4 + d points.  The C3 cycles the three involutions of
/// E4; when `twist_dihedral` it also acts on D(d) through the least unit of
/// order 3 mod d, which is the variant matching the reference centralizer
/// order 6.  The non-twisted variant is kept as a negative control.
inline Recipe four_group_dihedral_recipe(std::uint64_t d, bool twist_dihedral = true) {
  Recipe r;
  r.kind = Recipe::Kind::Semidirect;
  Recipe prod;
  prod.kind = Recipe::Kind::Direct;
  Recipe e4;
  e4.kind = Recipe::Kind::ElementaryAbelian;
  e4.n = 2;
  e4.k = 2;
  Recipe dd;
  dd.kind = Recipe::Kind::Dihedral;
  dd.n = d;
  prod.parts = {e4, dd};
  r.parts.push_back(prod);
  r.k = 3;
  r.action_images.resize(4 + d);
  // cycle the nonzero vectors of E4: 1 -> 2 -> 3 -> 1
  r.action_images[0] = 0;
  r.action_images[1] = 2;
  r.action_images[2] = 3;
  r.action_images[3] = 1;
  if (twist_dihedral) {
    std::uint64_t u = least_unit_of_order(d, 3);
    for (Pt i = 0; i < d; ++i) r.action_images[4 + i] = 4 + static_cast<Pt>((u * i) % d);
  } else {
    for (Pt i = 0; i < d; ++i) r.action_images[4 + i] = 4 + i;
  }
  return r;
}

// ---- censuses --------------------------------------------------------------

struct ElementClassInfo {
  Perm representative;
  std::size_t size = 0;
  bool real = false;
  Bigint centralizer_order;
};

/// All conjugacy classes of elements of order n (full enumeration; the group
/// order must be desk scale).
inline std::vector<ElementClassInfo> order_n_classes(const PermGroup& g, std::uint64_t n,
                                                     std::uint64_t enumeration_cap = 1u << 21) {
  if (g.order() > enumeration_cap)
    throw resource_cap_error("order_n_classes: group too large for full enumeration");
  std::vector<Perm> hits;
  g.for_each_element([&](const Perm& p) {
    if (p.order() == n) hits.push_back(p);
  });
  std::vector<ElementClassInfo> out;
  std::vector<ConjClass> classes;
  for (const Perm& x : hits) {
    bool seen = false;
    for (const ConjClass& c : classes)
      if (c.contains(x)) seen = true;
    if (seen) continue;
    classes.emplace_back(g, x);
    ElementClassInfo info;
    info.representative = x;
    info.size = classes.back().size();
    info.real = classes.back().is_real();
    info.centralizer_order = classes.back().centralizer_order();
    out.push_back(std::move(info));
  }
  return out;
}

struct InvolutionCensus {
  std::size_t count = 0;
  std::vector<std::size_t> class_sizes;
};

inline InvolutionCensus involution_census(const PermGroup& g,
                                          std::uint64_t enumeration_cap = 1u << 21) {
  InvolutionCensus out;
  auto classes = order_n_classes(g, 2, enumeration_cap);
  for (const auto& c : classes) {
    out.count += c.size;
    out.class_sizes.push_back(c.size);
  }
  return out;
}

}  // namespace gqx

#endif  // GQX_GROUPZOO_HPP_
