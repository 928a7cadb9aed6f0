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
//
// Reverse triangle inequality bounds. Every operation validates its
// hypotheses first (admissibility band 1e-12) and throws
// HypothesisViolationError with the residuals when an instance is
// inadmissible; a returned BoundReport therefore always satisfies
// slack >= -tol. All functions are pure and safe to call concurrently.

#ifndef TRIREV_BOUNDS_HPP
#define TRIREV_BOUNDS_HPP

#include <span>
#include <utility>
#include <vector>

#include "trirev/functional.hpp"
#include "trirev/report.hpp"
#include "trirev/space.hpp"

namespace trirev {

/// Largest r with r ||x_i|| <= Re F(x_i) for all i, clamped at 0. Requires a
/// unit-norm functional and nonzero summands.
double tightest_r(const VectorTuple& xs, const LinearFunctional& f,
                  double tol = kDefaultTolerance);
double tightest_r(const VectorTuple& xs, const Certificate& f,
                  double tol = kDefaultTolerance);

/// Multiplicative reverse r * sum||x_i|| <= ||sum x_i|| for a unit-norm F
/// with 0 <= r ||x_i|| <= Re F(x_i). Equality iff F(sum x_i) equals both
/// r * sum||x_i|| and ||sum x_i||; the two residuals are reported.
BoundReport dm_multiplicative(const VectorTuple& xs, const LinearFunctional& f,
                              double r, double tol = kDefaultTolerance);
BoundReport dm_multiplicative(const VectorTuple& xs, const Certificate& f,
                              double r, double tol = kDefaultTolerance);

/// m-functional multiplicative reverse (sum_k r_k^2 / c) sum||x_i|| <=
/// ||sum x_i|| under 0 <= r_k ||x_i|| <= Re <x_i, e_k>, with c the Gram-sum
/// top eigenvalue of the unit certificate family.
BoundReport dm_m_functional(const VectorTuple& xs, const CertificateSet& es,
                            std::span<const double> rks,
                            double tol = kDefaultTolerance);

/// Orthonormal-family multiplicative reverse sqrt(sum_k r_k^2) sum||x_i|| <=
/// ||sum x_i||; equality iff sum x_i = (sum||x_i||) sum_k r_k e_k.
BoundReport dm_orthonormal(const VectorTuple& xs, const std::vector<Vec>& eks,
                           std::span<const double> rks,
                           double tol = kDefaultTolerance);

/// Tightest admissible additive defects k_i = max(0, ||x_i|| - Re F(x_i))
/// for a unit-norm functional (the clamp is then inactive).
std::vector<double> additive_defects(const VectorTuple& xs,
                                     const LinearFunctional& f,
                                     double tol = kDefaultTolerance);
std::vector<double> additive_defects(const VectorTuple& xs,
                                     const Certificate& f,
                                     double tol = kDefaultTolerance);

/// Additive reverse sum||x_i|| - ||sum x_i|| <= sum k_i for a unit-norm F
/// with ||x_i|| - Re F(x_i) <= k_i.
BoundReport additive_reverse(const VectorTuple& xs, const LinearFunctional& f,
                             std::span<const double> ks,
                             double tol = kDefaultTolerance);
BoundReport additive_reverse(const VectorTuple& xs, const Certificate& f,
                             std::span<const double> ks,
                             double tol = kDefaultTolerance);

/// m-functional additive reverse: sum||x_i|| <= ||(1/m) sum F_k|| ||sum x_i||
/// + (1/m) sum_ik M_ik under ||x_i|| - Re F_k(x_i) <= M_ik. The averaged
/// norm uses the closed form of the certificate family.
BoundReport m_functional_additive(const VectorTuple& xs,
                                  const CertificateSet& fs, const Matrix& M,
                                  double tol = kDefaultTolerance);

/// Coarser unit-norm variant: sum||x_i|| <= ||sum x_i|| + (1/m) sum_ik M_ik.
/// Requires every ||F_k|| = 1; its rhs dominates the m_functional_additive
/// rhs on the same instance.
BoundReport m_functional_additive_coarse(const VectorTuple& xs,
                                         const CertificateSet& fs,
                                         const Matrix& M,
                                         double tol = kDefaultTolerance);

/// Inner-space m-vector additive reverse with nonzero anchors e_k:
/// sum||x_i|| <= ||(1/m) sum e_k|| ||sum x_i|| + (1/m) sum_ik M_ik.
/// Equality iff sum||x_i|| >= (1/m) sum_ik M_ik and sum x_i is the stated
/// positive multiple of sum e_k; both residuals are reported.
BoundReport m_additive_inner(const VectorTuple& xs, const std::vector<Vec>& eks,
                             const Matrix& M, double tol = kDefaultTolerance);

/// Builds an instance attaining equality in m_additive_inner: x_i = t_i *
/// sum e_k with exact defects M_ik = ||x_i|| - Re <x_i, e_k>. Requires unit
/// anchors and a nonvanishing anchor sum.
std::pair<VectorTuple, Matrix> make_equality_instance(
    const Space& space, const std::vector<Vec>& eks, std::span<const double> ts);

/// Specialization of m_additive_inner to orthogonal (resp. orthonormal)
/// anchors: the averaged-anchor norm collapses to sqrt(sum ||e_k||^2)/m
/// (resp. sqrt(m)/m).
BoundReport orthonormal_additive(const VectorTuple& xs,
                                 const std::vector<Vec>& eks, const Matrix& M,
                                 double tol = kDefaultTolerance);

/// Schwarz defect bound on a ball: ||x - a|| <= r implies
/// ||x|| ||a|| - Re<x,a> <= r^2 / 2, with equality iff ||x - a|| = r and
/// ||x|| = ||a||.
BoundReport schwarz_defect_ball(const Vec& x, const Vec& a, double r,
                                double tol = kDefaultTolerance);

/// Schwarz defect bound on an interval: Re<hi*y - x, x - lo*y> >= 0 implies
/// ||x|| ||y|| - Re<x,y> <= (hi-lo)^2 / (4(hi+lo)) * ||y||^2.
BoundReport schwarz_defect_interval(const Vec& x, const Vec& y, double lo,
                                    double hi, double tol = kDefaultTolerance);

/// Evaluates the two equivalent admissibility conditions of the interval
/// lemma: the sign form Re<hi*y - x, x - lo*y> >= 0 and the ball form
/// ||x - ((lo+hi)/2) y|| <= ((hi-lo)/2) ||y||. Returns both verdicts; they
/// agree whenever neither residual sits inside the +-1e-10 ambiguity band.
std::pair<bool, bool> interval_condition_equivalence(const Vec& x, const Vec& y,
                                                     double lo, double hi);

/// Ball-condition corollary: unit anchors with ||x_i - e_k|| <= r_ik give
/// sum||x_i|| <= ||(1/m) sum e_k|| ||sum x_i|| + (1/(2m)) sum_ik r_ik^2.
/// Its rhs dominates the exact-defect m_additive_inner rhs.
BoundReport ball_condition_bound(const VectorTuple& xs,
                                 const std::vector<Vec>& eks,
                                 const Matrix& radii,
                                 double tol = kDefaultTolerance);

/// Interval-condition corollary: unit anchors with
/// Re<hi_ik e_k - x_i, x_i - lo_ik e_k> >= 0 give
/// sum||x_i|| <= ||(1/m) sum e_k|| ||sum x_i||
///              + (1/(4m)) sum_ik (hi-lo)^2/(hi+lo) ||e_k||^2.
BoundReport interval_condition_bound(const VectorTuple& xs,
                                     const std::vector<Vec>& eks,
                                     const IntervalMatrix& intervals,
                                     double tol = kDefaultTolerance);

}  // namespace trirev

#endif  // TRIREV_BOUNDS_HPP
