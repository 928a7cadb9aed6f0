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

#ifndef TRIREV_SPACE_HPP
#define TRIREV_SPACE_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "trirev/errors.hpp"

namespace trirev {

using Complex = std::complex<double>;

/// Global comparison tolerance. Every operation that compares scalars takes
/// it as a trailing parameter so callers can tighten or loosen it per call.
inline constexpr double kDefaultTolerance = 1e-9;

/// Hypothesis residuals may dip this far below zero before an instance is
/// rejected; absorbs rounding on exactly-tight inputs.
inline constexpr double kHypothesisBand = 1e-12;

/// The norm on the complex plane indexed by p: (|Re z|^p + |Im z|^p)^{1/p}
/// for finite p >= 1, max(|Re z|, |Im z|) for p = infinity. p = 2 is the
/// usual modulus. Throws InvalidParameterError for p < 1.
double p_modulus(Complex z, double p);

/// One of the concrete spaces the bounds run over: a finite-dimensional real
/// or complex inner-product space, or the complex plane under a p-norm.
///
/// The p-normed plane is handled as a two-dimensional *real* normed space
/// (components Re, Im): the p-norm is absolutely homogeneous under real
/// scalars only, and that is all the implemented bounds require.
class Space {
 public:
  enum class Kind { inner_real, inner_complex, complex_plane };

  static Space inner_real(int dim);
  static Space inner_complex(int dim);
  static Space complex_plane(double p);

  Kind kind() const { return kind_; }
  /// Number of complex entries a member vector carries (1 for the plane).
  int dim() const { return dim_; }
  /// Norm index; only meaningful for complex_plane.
  double p() const;
  bool is_inner() const { return kind_ != Kind::complex_plane; }

  bool operator==(const Space& other) const = default;

 private:
  Space(Kind kind, int dim, double p) : kind_(kind), dim_(dim), p_(p) {}

  Kind kind_;
  int dim_;
  double p_;
};

/// A vector with complex entries. Construction rejects NaN/Inf entries so
/// the numeric kernels never have to re-check. Immutable after construction.
class Vec {
 public:
  explicit Vec(std::vector<Complex> entries);

  /// The single complex number z viewed as a member of the p-normed plane.
  static Vec plane(Complex z);
  static Vec zero(int dim);

  int size() const { return static_cast<int>(entries_.size()); }
  const Complex& operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  std::span<const Complex> entries() const { return entries_; }

  /// The value of a plane vector; throws ShapeError if size() != 1.
  Complex plane_value() const;

  bool operator==(const Vec& other) const = default;

 private:
  std::vector<Complex> entries_;
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(double t, const Vec& v);
Vec operator*(Complex t, const Vec& v);

/// Entrywise sum of a family; throws on mismatched sizes or empty input.
Vec sum(std::span<const Vec> vs);

/// A tuple of summands x_1, ..., x_n living in one space.
class VectorTuple {
 public:
  VectorTuple(Space space, std::vector<Vec> items);

  const Space& space() const { return space_; }
  int count() const { return static_cast<int>(items_.size()); }
  const Vec& operator[](int i) const { return items_[static_cast<std::size_t>(i)]; }
  std::span<const Vec> items() const { return items_; }

 private:
  Space space_;
  std::vector<Vec> items_;
};

/// Throws ShapeError/InvalidParameterError when x is not a member of space
/// (wrong length, or nonzero imaginary part in a real space).
void validate_member(const Space& space, const Vec& x);

/// Norm of x in its space: Euclidean for inner spaces, p_modulus for the
/// plane. Nonnegative; zero iff x = 0.
double norm(const Vec& x, const Space& space);

/// Plain Euclidean norm sqrt(sum |x_j|^2), independent of any Space.
double euclidean_norm(const Vec& x);

/// Standard inner product sum_j x_j * conj(y_j). Conjugate-symmetric and
/// linear in the first argument; inner(x,x) = euclidean_norm(x)^2.
Complex inner(const Vec& x, const Vec& y);

/// Semi-inner product on the p-normed plane, 1 < p < infinity:
///   [x,y] = |y|_p^{2-p} * sum_c x_c * sgn(y_c) * |y_c|^{p-1}
/// over the two real components c in {Re, Im}. Additive and real-homogeneous
/// in x, [y,y] = |y|_p^2, and |[x,y]| <= |x|_p |y|_p. The indices p = 1 and
/// p = infinity are rejected: the duality selection is not unique there.
double semi_inner_p(Complex x, Complex y, double p);
double semi_inner_p(const Vec& x, const Vec& y, double p);

/// Samples pairs on the unit p-sphere of the plane and reports whether no
/// sampled segment midpoint reaches back to the sphere (norm >= 1 - 1e-12),
/// i.e. whether the ball looks strictly convex. Expected true for p in
/// (1, infinity), false for p in {1, infinity}. Pairs closer than 0.05 carry
/// no curvature signal at the 1e-12 flatness threshold and are resampled.
bool strict_convexity_probe(double p, int samples, std::uint64_t seed);

}  // namespace trirev

#endif  // TRIREV_SPACE_HPP
