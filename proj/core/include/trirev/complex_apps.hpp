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
// Reverse bounds specialized to complex numbers under the 1-, infinity- and
// 2p-indexed norms, with multiplier functionals z -> a_k z. These agree with
// the general averaged-functional machinery run over the corresponding
// p-normed plane; the norm factors 1, sqrt(2), 2^{1/2 - 1/(2p)} are the
// closed-form operator norms of a unit multiplier.

#ifndef TRIREV_COMPLEX_APPS_HPP
#define TRIREV_COMPLEX_APPS_HPP

#include <vector>

#include "trirev/report.hpp"
#include "trirev/space.hpp"

namespace trirev {

/// Which plane norm a complex instance is measured in.
struct PIndex {
  enum class Kind { one, infinity, even };
  Kind kind = Kind::one;
  double even_p = 1.0;  // norm index is 2 * even_p; only for Kind::even

  static PIndex one() { return {Kind::one, 1.0}; }
  static PIndex inf() { return {Kind::infinity, 1.0}; }
  static PIndex even(double p);

  /// The actual norm index: 1, infinity, or 2p.
  double norm_index() const;
};

/// Summands x_j, multipliers a_k and admissible defects M_jk on the plane.
struct ComplexInstance {
  std::vector<Complex> xs;
  std::vector<Complex> as;
  Matrix M;
  PIndex p_index;

  ComplexInstance(std::vector<Complex> xs_in, std::vector<Complex> as_in,
                  Matrix m_in, PIndex p_in);

  int n() const { return static_cast<int>(xs.size()); }
  int m() const { return static_cast<int>(as.size()); }
};

/// sum_j |x_j|_1 <= (1/m)|sum a_k| * |sum x_j|_1 + (1/m) sum_jk M_jk
/// under |x_j|_1 <= Re(a_k x_j) + M_jk.
BoundReport reverse_bound_l1(const ComplexInstance& inst,
                             double tol = kDefaultTolerance);

/// Same with the max norm; the norm factor becomes sqrt(2)/m.
BoundReport reverse_bound_linf(const ComplexInstance& inst,
                               double tol = kDefaultTolerance);

/// Same with the 2p-indexed norm, p >= 1; factor 2^{1/2 - 1/(2p)}/m.
/// p = 1 recovers the usual-modulus inequality
/// sum|x_j| <= |(1/m) sum a_k| |sum x_j| + (1/m) sum_jk M_jk.
BoundReport reverse_bound_l2p(const ComplexInstance& inst, double p,
                              double tol = kDefaultTolerance);

/// Dispatch on inst.p_index.
BoundReport evaluate_complex_instance(const ComplexInstance& inst,
                                      double tol = kDefaultTolerance);

/// Smallest admissible defect matrix
/// M_jk = max(0, |x_j|_p - Re(a_k x_j)); feeding it back into the bounds
/// always passes the hypotheses.
Matrix exact_condition_defects(const std::vector<Complex>& xs,
                               const std::vector<Complex>& as, PIndex p_index);

}  // namespace trirev

#endif  // TRIREV_COMPLEX_APPS_HPP
