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

#include "trirev/space.hpp"

#include <cmath>
#include <limits>

#include "trirev/rng.hpp"

namespace trirev {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

double p_modulus(Complex z, double p) {
  if (std::isnan(p) || p < 1.0) {
    throw InvalidParameterError("p_modulus: index p must satisfy p >= 1");
  }
  const double re = std::abs(z.real());
  const double im = std::abs(z.imag());
  if (std::isinf(p)) return std::max(re, im);
  if (p == 2.0) return std::hypot(re, im);
  if (p == 1.0) return re + im;
  const double m = std::max(re, im);
  if (m == 0.0) return 0.0;
  // Scale by the larger component so pow never overflows.
  return m * std::pow(std::pow(re / m, p) + std::pow(im / m, p), 1.0 / p);
}

Space Space::inner_real(int dim) {
  if (dim < 1) throw InvalidParameterError("Space: dim must be >= 1");
  return Space(Kind::inner_real, dim, 0.0);
}

Space Space::inner_complex(int dim) {
  if (dim < 1) throw InvalidParameterError("Space: dim must be >= 1");
  return Space(Kind::inner_complex, dim, 0.0);
}

Space Space::complex_plane(double p) {
  if (std::isnan(p) || p < 1.0) {
    throw InvalidParameterError("Space: plane index p must satisfy p >= 1");
  }
  return Space(Kind::complex_plane, 1, p);
}

double Space::p() const {
  if (kind_ != Kind::complex_plane) {
    throw InvalidParameterError("Space: p() is only defined for complex_plane");
  }
  return p_;
}

Vec::Vec(std::vector<Complex> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidParameterError("Vec: needs at least one entry");
  for (const Complex& z : entries_) {
    if (!finite(z)) throw InvalidParameterError("Vec: entries must be finite");
  }
}

Vec Vec::plane(Complex z) { return Vec(std::vector<Complex>{z}); }

Vec Vec::zero(int dim) {
  if (dim < 1) throw InvalidParameterError("Vec: dim must be >= 1");
  return Vec(std::vector<Complex>(static_cast<std::size_t>(dim), Complex(0.0, 0.0)));
}

Complex Vec::plane_value() const {
  if (size() != 1) throw ShapeError("Vec: not a plane vector");
  return entries_[0];
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeError("Vec: size mismatch in +");
  std::vector<Complex> out(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(i)] = a[i] + b[i];
  return Vec(std::move(out));
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeError("Vec: size mismatch in -");
  std::vector<Complex> out(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(i)] = a[i] - b[i];
  return Vec(std::move(out));
}

Vec operator*(double t, const Vec& v) {
  std::vector<Complex> out(static_cast<std::size_t>(v.size()));
  for (int i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = t * v[i];
  return Vec(std::move(out));
}

Vec operator*(Complex t, const Vec& v) {
  std::vector<Complex> out(static_cast<std::size_t>(v.size()));
  for (int i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = t * v[i];
  return Vec(std::move(out));
}

Vec sum(std::span<const Vec> vs) {
  if (vs.empty()) throw InvalidParameterError("sum: empty family");
  Vec acc = vs[0];
  for (std::size_t i = 1; i < vs.size(); ++i) acc = acc + vs[i];
  return acc;
}

VectorTuple::VectorTuple(Space space, std::vector<Vec> items)
    : space_(space), items_(std::move(items)) {
  if (items_.empty()) throw InvalidParameterError("VectorTuple: needs n >= 1 items");
  for (const Vec& v : items_) validate_member(space_, v);
}

void validate_member(const Space& space, const Vec& x) {
  if (x.size() != space.dim()) throw ShapeError("vector length does not match space dimension");
  if (space.kind() == Space::Kind::inner_real) {
    for (const Complex& z : x.entries()) {
      if (z.imag() != 0.0) {
        throw InvalidParameterError("real space member has a nonzero imaginary part");
      }
    }
  }
}

double norm(const Vec& x, const Space& space) {
  validate_member(space, x);
  if (space.kind() == Space::Kind::complex_plane) return p_modulus(x[0], space.p());
  return euclidean_norm(x);
}

double euclidean_norm(const Vec& x) {
  double acc = 0.0;
  for (const Complex& z : x.entries()) acc += std::norm(z);
  return std::sqrt(acc);
}

Complex inner(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw ShapeError("inner: size mismatch");
  Complex acc(0.0, 0.0);
  for (int i = 0; i < x.size(); ++i) acc += x[i] * std::conj(y[i]);
  return acc;
}

double semi_inner_p(Complex x, Complex y, double p) {
  if (std::isnan(p) || p < 1.0) {
    throw InvalidParameterError("semi_inner_p: index p must satisfy p >= 1");
  }
  if (p == 1.0 || std::isinf(p)) {
    throw UnsupportedError("semi_inner_p: p in {1, infinity} has no unique duality selection");
  }
  const double ny = p_modulus(y, p);
  if (ny == 0.0) throw DegenerateInputError("semi_inner_p: y must be nonzero");
  auto sgn = [](double t) { return t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0); };
  double s = 0.0;
  s += x.real() * sgn(y.real()) * std::pow(std::abs(y.real()), p - 1.0);
  s += x.imag() * sgn(y.imag()) * std::pow(std::abs(y.imag()), p - 1.0);
  return std::pow(ny, 2.0 - p) * s;
}

double semi_inner_p(const Vec& x, const Vec& y, double p) {
  if (x.size() != 1 || y.size() != 1) {
    throw ShapeError("semi_inner_p: defined on the plane (single complex entries)");
  }
  return semi_inner_p(x[0], y[0], p);
}

bool strict_convexity_probe(double p, int samples, std::uint64_t seed) {
  if (std::isnan(p) || p < 1.0) {
    throw InvalidParameterError("strict_convexity_probe: index p must satisfy p >= 1");
  }
  if (samples < 1) throw InvalidParameterError("strict_convexity_probe: samples >= 1");
  // Below this p-distance the midpoint of two sphere points sits within
  // 1e-12 of the sphere for every p, so such pairs are uninformative.
  constexpr double kMinSeparation = 0.05;
  Rng rng(seed);
  const Space plane = Space::complex_plane(p);
  int produced = 0;
  int attempts = 0;
  const int max_attempts = samples * 50;
  while (produced < samples && attempts < max_attempts) {
    ++attempts;
    const Complex x = rng.unit_vector(plane)[0];
    const Complex y = rng.unit_vector(plane)[0];
    if (p_modulus(x - y, p) < kMinSeparation) continue;
    ++produced;
    const Complex mid = 0.5 * (x + y);
    if (p_modulus(mid, p) >= 1.0 - 1e-12) return false;
  }
  return true;
}

}  // namespace trirev
