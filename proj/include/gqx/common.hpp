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
#ifndef GQX_COMMON_HPP_
#define GQX_COMMON_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gqx {

using Bigint = boost::multiprecision::cpp_int;

/// Domain points of a permutation domain.
using Pt = std::uint32_t;

/// Thrown on contract violations (bad arguments, mismatched domains, ...).
class invalid_argument_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a computation would exceed a configured resource cap.
class resource_cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a deterministic search exhausts its retry budget.
class search_failure_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Global knobs shared by the heavier computations.  Values are plumbed
/// through explicitly by the CLI; the defaults keep everything at desk scale.
struct Config {
  std::uint64_t seed = 0x5eed5eed5eed5eedULL;
  std::uint64_t memory_cap_bytes = 2ULL << 30;  // class BFS cap, 2 GiB
  unsigned threads = 1;  // reserved; computations are single-threaded
};

inline Config& config() {
  static Config cfg;
  return cfg;
}

}  // namespace gqx

#endif  // GQX_COMMON_HPP_
