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
#ifndef GQX_EXPONENTS_HPP_
#define GQX_EXPONENTS_HPP_

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "gqx/common.hpp"

namespace gqx {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// All (n0, r0) with n0 * r0 = e, r0 prime and n0 >= 3 (the subfield
/// decompositions of the defining exponent e = 2m+1).
inline std::vector<std::pair<unsigned, unsigned>> subfield_decompositions(unsigned e) {
  if (e < 3 || e % 2 == 0) throw invalid_argument_error("subfield_decompositions: e must be odd and >= 3");
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned r0 = 2; r0 <= e; ++r0) {
    if (e % r0 != 0 || !is_prime_u64(r0)) continue;
    unsigned n0 = e / r0;
    if (n0 >= 3) out.emplace_back(n0, r0);
  }
  return out;
}

/// Attainable exponents a with |fixed set| = 2^a for an involution on the
/// non-parabolic primitive Sz(2^(2m+1)) actions: 4m (Frobenius kinds),
/// 4m+1 (dihedral), 2 n0 (r0 - 1) per subfield decomposition.
inline std::set<unsigned> exponent_set_suzuki(unsigned m) {
  std::set<unsigned> a{4 * m, 4 * m + 1};
  for (auto [n0, r0] : subfield_decompositions(2 * m + 1)) a.insert(2 * n0 * (r0 - 1));
  return a;
}

/// Attainable exponents a with |fixed set| = 3^a for a non-real order-3
/// element on the non-parabolic primitive R(3^(2m+1)) actions: 2m+1
/// (involution-centralizer kind), 4m+1 (four-group normalizer and Frobenius
/// kinds), 2 n0 (r0 - 1) per subfield decomposition.
inline std::set<unsigned> exponent_set_ree(unsigned m) {
  std::set<unsigned> a{2 * m + 1, 4 * m + 1};
  for (auto [n0, r0] : subfield_decompositions(2 * m + 1)) a.insert(2 * n0 * (r0 - 1));
  return a;
}

}  // namespace gqx

#endif  // GQX_EXPONENTS_HPP_
