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
#ifndef GQX_FIELD_HPP_
#define GQX_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "gqx/common.hpp"

namespace gqx {

class FieldElement;

/// GF(p^k) for p in {2,3} in the polynomial basis.
///
/// Elements are encoded as integers 0..q-1 whose base-p digits are the
/// coefficients, constant term first.  The modulus is the monic irreducible
/// of degree k whose coefficient encoding is smallest, so a given (p, k)
/// yields identical encodings in every run.
///
/// Multiplication goes through discrete log/antilog tables; addition is
/// digit arithmetic (XOR in characteristic 2).  All arithmetic is exact.
class Field : public std::enable_shared_from_this<Field> {
 public:
  using Ref = std::shared_ptr<const Field>;

  /// Builds GF(p^k).  Throws invalid_argument_error for p not in {2,3},
  /// k < 1, or a size beyond the table-backed range.
  static Ref make(unsigned p, unsigned k) {
    if (p != 2 && p != 3) throw invalid_argument_error("Field: characteristic must be 2 or 3");
    if (k < 1) throw invalid_argument_error("Field: degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
      q *= p;
      if (q > 4096) throw invalid_argument_error("Field: p^k exceeds supported size");
    }
    return Ref(new Field(p, k, static_cast<unsigned>(q)));
  }

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  unsigned size() const { return q_; }

  /// Modulus coefficients, constant term first, including the leading 1.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  unsigned add(unsigned a, unsigned b) const {
    if (p_ == 2) return a ^ b;
    unsigned r = 0, mul = 1;
    for (unsigned i = 0; i < k_; ++i) {
      r += ((a + b) % 3) * mul;
      a /= 3;
      b /= 3;
      mul *= 3;
    }
    return r;
  }

  unsigned neg(unsigned a) const {
    if (p_ == 2) return a;
    unsigned r = 0, mul = 1;
    for (unsigned i = 0; i < k_; ++i) {
      r += ((3 - a % 3) % 3) * mul;
      a /= 3;
      mul *= 3;
    }
    return r;
  }

  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

  unsigned mul(unsigned a, unsigned b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }

  unsigned inv(unsigned a) const {
    if (a == 0) throw invalid_argument_error("Field: inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  unsigned div(unsigned a, unsigned b) const { return mul(a, inv(b)); }

  /// a^e by exact square-and-multiply (e may exceed q-1).
  unsigned pow(unsigned a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1u : 0u;
    std::uint64_t le = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[le];
  }

  /// a^(p^e), the e-th Frobenius power.
  unsigned frobenius(unsigned a, unsigned e) const {
    unsigned r = a;
    for (unsigned i = 0; i < e % k_; ++i) r = pow(r, p_);
    return r;
  }

  /// The Tits endomorphism a -> a^(p^(m+1)) on GF(p^(2m+1)); applying it
  /// twice is the Frobenius a -> a^p.  Requires odd degree.
  unsigned tits_endo(unsigned a) const {
    if (k_ % 2 == 0) throw invalid_argument_error("Field: Tits endomorphism needs odd degree");
    unsigned m = (k_ - 1) / 2;
    return frobenius(a, m + 1);
  }

  /// Smallest generator of the multiplicative group (by encoding).
  unsigned primitive_element() const { return primitive_; }

  /// Multiplicative order of a nonzero element.
  unsigned mult_order(unsigned a) const {
    if (a == 0) throw invalid_argument_error("Field: order of zero");
    unsigned n = q_ - 1;
    unsigned d = n / std::gcd(n, log_[a] == 0 ? n : log_[a]);
    return log_[a] == 0 ? 1 : d;
  }

  /// Coefficient list text form, constant term first: "1,0,1".
  std::string to_text(unsigned a) const {
    std::ostringstream os;
    for (unsigned i = 0; i < k_; ++i) {
      if (i) os << ',';
      os << a % p_;
      a /= p_;
    }
    return os.str();
  }

  unsigned from_text(const std::string& s) const {
    std::istringstream is(s);
    unsigned r = 0, mul = 1, coeff = 0;
    char comma = 0;
    for (unsigned i = 0; i < k_; ++i) {
      if (i && !(is >> comma && comma == ',')) throw invalid_argument_error("Field: bad element text");
      if (!(is >> coeff) || coeff >= p_) throw invalid_argument_error("Field: bad element text");
      r += coeff * mul;
      mul *= p_;
    }
    return r;
  }

  FieldElement element(unsigned encoding) const;
  FieldElement zero() const;
  FieldElement one() const;

  bool same(const Field& other) const { return p_ == other.p_ && k_ == other.k_; }

 private:
  Field(unsigned p, unsigned k, unsigned q) : p_(p), k_(k), q_(q) {
    pick_modulus();
    build_tables();
  }

  // polynomial helpers on encoded elements (digit vectors base p)
  unsigned poly_mul_mod(unsigned a, unsigned b) const {
    // schoolbook over the digits, reduced by the modulus
    std::vector<unsigned> prod(2 * k_ - 1, 0);
    std::vector<unsigned> da(k_), db(k_);
    for (unsigned i = 0; i < k_; ++i) { da[i] = a % p_; a /= p_; }
    for (unsigned i = 0; i < k_; ++i) { db[i] = b % p_; b /= p_; }
    for (unsigned i = 0; i < k_; ++i)
      if (da[i])
        for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    for (unsigned i = 2 * k_ - 2; i >= k_; --i) {
      if (prod[i]) {
        unsigned f = prod[i];
        for (unsigned j = 0; j <= k_; ++j)
          prod[i - k_ + j] = (prod[i - k_ + j] + (p_ - 1) * f * modulus_[j]) % p_;
      }
      if (i == k_) break;
    }
    unsigned r = 0, mul = 1;
    for (unsigned i = 0; i < k_; ++i) { r += prod[i] * mul; mul *= p_; }
    return r;
  }

  // trial division of the monic polynomial c by the monic polynomial d
  bool divides(const std::vector<unsigned>& d, std::vector<unsigned> r) const {
    unsigned dd = static_cast<unsigned>(d.size()) - 1;
    for (unsigned top = static_cast<unsigned>(r.size()) - 1; top >= dd; --top) {
      if (r[top]) {
        unsigned f = r[top];
        for (unsigned j = 0; j <= dd; ++j)
          r[top - dd + j] = (r[top - dd + j] + (p_ - 1) * f * d[j]) % p_;
      }
      if (top == dd) break;
    }
    for (unsigned i = 0; i < dd; ++i)
      if (r[i]) return false;
    return true;
  }

  bool modulus_irreducible(const std::vector<unsigned>& c) const {
    // deterministic: no monic divisor of degree 1..k/2
    for (unsigned dd = 1; 2 * dd <= k_; ++dd) {
      unsigned count = 1;
      for (unsigned i = 0; i < dd; ++i) count *= p_;
      for (unsigned enc = 0; enc < count; ++enc) {
        std::vector<unsigned> d(dd + 1, 0);
        unsigned e = enc;
        for (unsigned i = 0; i < dd; ++i) { d[i] = e % p_; e /= p_; }
        d[dd] = 1;
        if (divides(d, c)) return false;
      }
    }
    return true;
  }

  void pick_modulus() {
    if (k_ == 1) {
      modulus_ = {0, 1};  // prime field, represented modulo x
      return;
    }
    for (unsigned enc = 0; enc < q_; ++enc) {
      std::vector<unsigned> c(k_ + 1, 0);
      unsigned e = enc;
      for (unsigned i = 0; i < k_; ++i) { c[i] = e % p_; e /= p_; }
      c[k_] = 1;
      if (modulus_irreducible(c)) {
        modulus_ = c;
        return;
      }
    }
    throw std::logic_error("Field: no irreducible modulus found");
  }

  void build_tables() {
    log_.assign(q_, 0);
    exp_.assign(q_ - 1, 0);
    // find the least primitive element
    for (unsigned g = 1; g < q_; ++g) {
      unsigned v = 1;
      bool prim = true;
      std::vector<bool> seen(q_, false);
      for (unsigned i = 0; i + 1 < q_; ++i) {
        if (seen[v]) { prim = false; break; }
        seen[v] = true;
        v = (k_ == 1) ? (v * g) % p_ : poly_mul_mod(v, g);
      }
      if (prim && v == 1) {
        primitive_ = g;
        v = 1;
        for (unsigned i = 0; i + 1 < q_; ++i) {
          exp_[i] = v;
          log_[v] = i;
          v = (k_ == 1) ? (v * g) % p_ : poly_mul_mod(v, g);
        }
        return;
      }
    }
    throw std::logic_error("Field: no primitive element found");
  }

  unsigned p_, k_, q_;
  unsigned primitive_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<unsigned> log_, exp_;
};

/// A field element bound to its field; spec-checked arithmetic.
class FieldElement {
 public:
  FieldElement() : f_(nullptr), v_(0) {}
  FieldElement(Field::Ref f, unsigned v) : f_(std::move(f)), v_(v) {}

  unsigned encoding() const { return v_; }
  const Field::Ref& field() const { return f_; }

  FieldElement operator+(const FieldElement& o) const { return bin(o, f_->add(v_, o.v_)); }
  FieldElement operator-(const FieldElement& o) const { return bin(o, f_->sub(v_, o.v_)); }
  FieldElement operator*(const FieldElement& o) const { return bin(o, f_->mul(v_, o.v_)); }
  FieldElement operator/(const FieldElement& o) const { return bin(o, f_->div(v_, o.v_)); }
  FieldElement inv() const { return {f_, f_->inv(v_)}; }
  FieldElement pow(std::uint64_t e) const { return {f_, f_->pow(v_, e)}; }
  FieldElement frobenius(unsigned e) const { return {f_, f_->frobenius(v_, e)}; }
  FieldElement tits() const { return {f_, f_->tits_endo(v_)}; }
  bool operator==(const FieldElement& o) const { return v_ == o.v_ && f_->same(*o.f_); }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  bool is_zero() const { return v_ == 0; }

  std::string text() const { return f_->to_text(v_); }

 private:
  FieldElement bin(const FieldElement& o, unsigned r) const {
    if (!f_ || !o.f_ || !f_->same(*o.f_)) throw invalid_argument_error("FieldElement: mismatched fields");
    return {f_, r};
  }
  Field::Ref f_;
  unsigned v_;
};

inline FieldElement Field::element(unsigned encoding) const {
  if (encoding >= q_) throw invalid_argument_error("Field: encoding out of range");
  return FieldElement(shared_from_this(), encoding);
}
inline FieldElement Field::zero() const { return element(0); }
inline FieldElement Field::one() const { return element(1); }

}  // namespace gqx

#endif  // GQX_FIELD_HPP_
