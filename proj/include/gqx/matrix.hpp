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
#ifndef GQX_MATRIX_HPP_
#define GQX_MATRIX_HPP_

#include <array>
#include <cstdint>

#include "gqx/field.hpp"

namespace gqx {

/// N x N matrix over a finite field, entries stored as field encodings.
template <std::size_t N>
struct Mat {
  std::array<std::array<unsigned, N>, N> a{};

  static Mat identity() {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) m.a[i][i] = 1;
    return m;
  }
};

template <std::size_t N>
Mat<N> mat_mul(const Field& f, const Mat<N>& x, const Mat<N>& y) {
  Mat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      unsigned s = 0;
      for (std::size_t k = 0; k < N; ++k)
        if (x.a[i][k] && y.a[k][j]) s = f.add(s, f.mul(x.a[i][k], y.a[k][j]));
      r.a[i][j] = s;
    }
  return r;
}

template <std::size_t N>
std::array<unsigned, N> mat_apply(const Field& f, const Mat<N>& m, const std::array<unsigned, N>& v) {
  std::array<unsigned, N> r{};
  for (std::size_t i = 0; i < N; ++i) {
    unsigned s = 0;
    for (std::size_t k = 0; k < N; ++k)
      if (m.a[i][k] && v[k]) s = f.add(s, f.mul(m.a[i][k], v[k]));
    r[i] = s;
  }
  return r;
}

/// Scales a nonzero vector so its first nonzero coordinate is 1.
template <std::size_t N>
std::array<unsigned, N> normalize_projective(const Field& f, std::array<unsigned, N> v) {
  for (std::size_t i = 0; i < N; ++i) {
    if (v[i]) {
      unsigned inv = f.inv(v[i]);
      for (std::size_t j = 0; j < N; ++j) v[j] = f.mul(inv, v[j]);
      return v;
    }
  }
  throw invalid_argument_error("normalize_projective: zero vector");
}

}  // namespace gqx

#endif  // GQX_MATRIX_HPP_
