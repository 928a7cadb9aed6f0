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

#ifndef TRIREV_FUNCTIONAL_HPP
#define TRIREV_FUNCTIONAL_HPP

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "trirev/space.hpp"

namespace trirev {

/// x -> <x, e> on an inner space; e must be nonzero.
struct InnerVecForm {
  Vec e;
};

/// z -> a * z on the p-normed plane; a must be nonzero.
struct ComplexMultForm {
  Complex a;
  double p;
};

/// A serializable linear-functional certificate: either an inner-product
/// form against a fixed vector, or a complex-multiplier form on the plane.
class Certificate {
 public:
  static Certificate inner_vec(Space space, Vec e);
  static Certificate complex_mult(Complex a, double p);

  const Space& space() const { return space_; }
  bool is_inner_vec() const { return std::holds_alternative<InnerVecForm>(form_); }
  bool is_complex_mult() const { return std::holds_alternative<ComplexMultForm>(form_); }
  const InnerVecForm& inner_vec_form() const { return std::get<InnerVecForm>(form_); }
  const ComplexMultForm& complex_mult_form() const { return std::get<ComplexMultForm>(form_); }

 private:
  Certificate(Space space, std::variant<InnerVecForm, ComplexMultForm> form)
      : space_(space), form_(std::move(form)) {}

  Space space_;
  std::variant<InnerVecForm, ComplexMultForm> form_;
};

/// Evaluate the certificate at x. Additive and real-homogeneous in x, with
/// |apply(F,x)| <= functional_norm(F) * norm(x).
Complex apply(const Certificate& f, const Vec& x);

/// Operator norm in closed form. InnerVec: the Euclidean norm of e.
/// ComplexMult on the p-plane: |a| for p <= 2 and 2^{1/2 - 1/p} |a| for
/// p >= 2 (so sqrt(2)|a| at p = infinity) -- the extremal ratio of the
/// Euclidean modulus against the p-norm, attained on an axis resp. at 1+i.
double functional_norm(const Certificate& f);

/// Max of |apply(F, x)| over seeded random unit-sphere points. A lower
/// estimate of functional_norm(F): never exceeds it (up to 1e-12) and
/// converges to it as samples grow.
double estimate_norm_by_sampling(const Certificate& f, int samples,
                                 std::uint64_t seed);

/// A nonempty family F_1..F_m of certificates of one variant over one space.
class CertificateSet {
 public:
  explicit CertificateSet(std::vector<Certificate> certs);

  int size() const { return static_cast<int>(certs_.size()); }
  const Certificate& operator[](int k) const { return certs_[static_cast<std::size_t>(k)]; }
  std::span<const Certificate> certs() const { return certs_; }
  const Space& space() const { return certs_.front().space(); }
  bool is_inner_vec() const { return certs_.front().is_inner_vec(); }

  /// Certificate for the averaged functional (1/m) sum_k F_k, used by the
  /// additive m-functional bounds. Throws DegenerateInputError when the
  /// average vanishes (zero functional has no certificate form here).
  Certificate average() const;

  bool all_unit_norm(double tol) const;

 private:
  std::vector<Certificate> certs_;
};

/// Runtime view of a linear functional, so the single-functional bounds can
/// also run against evaluation rules with no Certificate form (the
/// semi-inner-product rule on the p-plane).
class LinearFunctional {
 public:
  virtual ~LinearFunctional() = default;
  virtual Complex eval(const Vec& x) const = 0;
  virtual double norm() const = 0;
  virtual const Space& space() const = 0;
};

/// Certificate-backed functional.
class CertificateFunctional final : public LinearFunctional {
 public:
  explicit CertificateFunctional(Certificate cert) : cert_(std::move(cert)) {}

  Complex eval(const Vec& x) const override { return apply(cert_, x); }
  double norm() const override { return functional_norm(cert_); }
  const Space& space() const override { return cert_.space(); }
  const Certificate& certificate() const { return cert_; }

 private:
  Certificate cert_;
};

/// x -> [x, e] under the semi-inner product of the p-plane, 1 < p < inf.
/// Real-valued, real-linear, with operator norm |e|_p.
class SemiInnerFunctional final : public LinearFunctional {
 public:
  SemiInnerFunctional(Complex e, double p);

  Complex eval(const Vec& x) const override;
  double norm() const override { return norm_; }
  const Space& space() const override { return space_; }
  Complex anchor() const { return e_; }
  double p() const { return p_; }

 private:
  Space space_;
  Complex e_;
  double p_;
  double norm_;
};

/// The largest admissible constant c with sum_k |<x,e_k>|^2 <= c ||x||^2,
/// i.e. the top eigenvalue of the Gram-sum operator sum_k e_k e_k^*.
/// Requires unit-norm inner-vector certificates; the result lies in [1, m]
/// up to tol. Computed by seeded power iteration (residual tolerance 1e-10,
/// at most 10^4 iterations), accelerated by repeated squaring of the
/// normalized operator so near-degenerate top pairs still converge.
double dm_constant_c(const CertificateSet& es, double tol = kDefaultTolerance);

}  // namespace trirev

#endif  // TRIREV_FUNCTIONAL_HPP
