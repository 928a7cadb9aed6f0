// Copyright 2026 The trirev Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRIREV_RNG_HPP
#define TRIREV_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "trirev/space.hpp"

namespace trirev {

/// Deterministic random source. Wraps mt19937_64 and derives all variates
/// from its raw 64-bit output directly, so a given seed reproduces the same
/// stream on every run of the same build. Distribution classes from
/// <random> are avoided on purpose: their algorithms are
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi);
  /// Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi);
  /// Standard normal via Box-Muller.
  double gaussian();
  Complex gaussian_complex();

  /// Vector with independent standard-normal components (imaginary parts
  /// zero in real spaces; for the plane, one complex Gaussian entry).
  Vec gaussian_vec(const Space& space);

  /// Unit vector in the space's own norm. Inner spaces: normalized Gaussian
  /// direction. Plane: a uniform angle normalized by the p-norm.
  Vec unit_vector(const Space& space);

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Stable per-instance seed derived from a master seed, a textual tag and an
/// index. Sharding work across tags/indices cannot change any stream.
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                          std::uint64_t index);

}  // namespace trirev

#endif  // TRIREV_RNG_HPP
