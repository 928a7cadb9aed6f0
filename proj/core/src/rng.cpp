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

#include "trirev/rng.hpp"

#include <cmath>
#include <numbers>

namespace trirev {

double Rng::uniform() {
  // 53 random mantissa bits -> [0, 1).
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int Rng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next_u64() % span);
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

Complex Rng::gaussian_complex() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im);
}

Vec Rng::gaussian_vec(const Space& space) {
  std::vector<Complex> entries(static_cast<std::size_t>(space.dim()));
  for (auto& z : entries) {
    switch (space.kind()) {
      case Space::Kind::inner_real:
        z = Complex(gaussian(), 0.0);
        break;
      case Space::Kind::inner_complex:
      case Space::Kind::complex_plane:
        z = gaussian_complex();
        break;
    }
  }
  return Vec(std::move(entries));
}

Vec Rng::unit_vector(const Space& space) {
  if (space.kind() == Space::Kind::complex_plane) {
    const double theta = uniform(0.0, 2.0 * std::numbers::pi);
    const Complex z(std::cos(theta), std::sin(theta));
    return Vec::plane(z * (1.0 / p_modulus(z, space.p())));
  }
  for (;;) {
    Vec v = gaussian_vec(space);
    const double n = euclidean_norm(v);
    if (n > 1e-8) return (1.0 / n) * v;
  }
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                          std::uint64_t index) {
  // FNV-1a over the tag, then two splitmix64 finalization rounds.
  std::uint64_t h = 1469598103934665603ull;
  for (char c : tag) {
    h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
    h *= 1099511628211ull;
  }
  std::uint64_t z = master ^ h ^ (0x9e3779b97f4a7c15ull * (index + 1));
  for (int round = 0; round < 2; ++round) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z = z ^ (z >> 31);
  }
  return z;
}

}  // namespace trirev
