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

#include "trirev/functional.hpp"

#include <cmath>
#include <map>

#include "trirev/rng.hpp"

namespace trirev {

namespace {

// Extremal ratio sup |z|_2 / |z|_p on the plane. 1 for p <= 2 (axis point),
// 2^{1/2-1/p} for p >= 2 (attained at 1+i); sqrt(2) in the limit p -> inf.
double euclid_over_p_ratio(double p) {
  if (std::isinf(p)) return std::sqrt(2.0);
  if (p <= 2.0) return 1.0;
  return std::pow(2.0, 0.5 - 1.0 / p);
}

}  // namespace

Certificate Certificate::inner_vec(Space space, Vec e) {
  if (!space.is_inner()) {
    throw InvalidParameterError("Certificate: inner_vec requires an inner space");
  }
  validate_member(space, e);
  if (euclidean_norm(e) == 0.0) {
    throw DegenerateInputError("Certificate: anchor vector e must be nonzero");
  }
  return Certificate(space, InnerVecForm{std::move(e)});
}

Certificate Certificate::complex_mult(Complex a, double p) {
  if (a == Complex(0.0, 0.0)) {
    throw DegenerateInputError("Certificate: multiplier a must be nonzero");
  }
  if (!(std::isfinite(a.real()) && std::isfinite(a.imag()))) {
    throw InvalidParameterError("Certificate: multiplier must be finite");
  }
  const Space space = Space::complex_plane(p);  // validates p
  return Certificate(space, ComplexMultForm{a, p});
}

Complex apply(const Certificate& f, const Vec& x) {
  validate_member(f.space(), x);
  if (f.is_inner_vec()) return inner(x, f.inner_vec_form().e);
  return f.complex_mult_form().a * x.plane_value();
}

double functional_norm(const Certificate& f) {
  if (f.is_inner_vec()) return euclidean_norm(f.inner_vec_form().e);
  const auto& form = f.complex_mult_form();
  return euclid_over_p_ratio(form.p) * std::abs(form.a);
}

double estimate_norm_by_sampling(const Certificate& f, int samples,
                                 std::uint64_t seed) {
  if (samples < 1) throw InvalidParameterError("estimate_norm_by_sampling: samples >= 1");
  Rng rng(seed);
  double best = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Vec x = rng.unit_vector(f.space());
    best = std::max(best, std::abs(apply(f, x)));
  }
  return best;
}

CertificateSet::CertificateSet(std::vector<Certificate> certs)
    : certs_(std::move(certs)) {
  if (certs_.empty()) throw InvalidSetError("CertificateSet: needs m >= 1 certificates");
  const bool inner = certs_.front().is_inner_vec();
  for (const Certificate& c : certs_) {
    if (c.is_inner_vec() != inner) {
      throw InvalidSetError("CertificateSet: mixed certificate variants");
    }
    if (!(c.space() == certs_.front().space())) {
      throw InvalidSetError("CertificateSet: certificates live in different spaces");
    }
  }
}

Certificate CertificateSet::average() const {
  const double inv_m = 1.0 / static_cast<double>(size());
  if (is_inner_vec()) {
    Vec acc = certs_.front().inner_vec_form().e;
    for (int k = 1; k < size(); ++k) acc = acc + certs_[static_cast<std::size_t>(k)].inner_vec_form().e;
    Vec avg = inv_m * acc;
    if (euclidean_norm(avg) == 0.0) {
      throw DegenerateInputError("CertificateSet: averaged functional vanishes");
    }
    return Certificate::inner_vec(space(), std::move(avg));
  }
  Complex acc(0.0, 0.0);
  for (const Certificate& c : certs_) acc += c.complex_mult_form().a;
  const Complex avg = inv_m * acc;
  if (avg == Complex(0.0, 0.0)) {
    throw DegenerateInputError("CertificateSet: averaged functional vanishes");
  }
  return Certificate::complex_mult(avg, space().p());
}

bool CertificateSet::all_unit_norm(double tol) const {
  for (const Certificate& c : certs_) {
    if (std::abs(functional_norm(c) - 1.0) > tol) return false;
  }
  return true;
}

SemiInnerFunctional::SemiInnerFunctional(Complex e, double p)
    : space_(Space::complex_plane(p)), e_(e), p_(p), norm_(p_modulus(e, p)) {
  if (p <= 1.0 || std::isinf(p)) {
    throw UnsupportedError("SemiInnerFunctional: requires 1 < p < infinity");
  }
  if (norm_ == 0.0) throw DegenerateInputError("SemiInnerFunctional: e must be nonzero");
}

Complex SemiInnerFunctional::eval(const Vec& x) const {
  validate_member(space_, x);
  return Complex(semi_inner_p(x[0], e_, p_), 0.0);
}

namespace {

using CMatrix = std::vector<std::vector<Complex>>;

CMatrix multiply(const CMatrix& a, const CMatrix& b) {
  const std::size_t d = a.size();
  CMatrix out(d, std::vector<Complex>(d, Complex(0.0, 0.0)));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const Complex aik = a[i][k];
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < d; ++j) out[i][j] += aik * b[k][j];
    }
  }
  return out;
}

double frobenius(const CMatrix& a) {
  double acc = 0.0;
  for (const auto& row : a) {
    for (const Complex& z : row) acc += std::norm(z);
  }
  return std::sqrt(acc);
}

}  // namespace

double dm_constant_c(const CertificateSet& es, double tol) {
  if (!es.is_inner_vec()) {
    throw InvalidParameterError("dm_constant_c: requires inner-vector certificates");
  }
  std::map<std::string, double> residuals;
  double max_dev = 0.0;
  for (int k = 0; k < es.size(); ++k) {
    max_dev = std::max(max_dev, std::abs(functional_norm(es[k]) - 1.0));
  }
  if (max_dev > tol) {
    residuals["unit_norm_margin"] = tol - max_dev;
    throw HypothesisViolationError("dm_constant_c: certificates must have unit norm",
                                   residuals);
  }

  const std::size_t d = static_cast<std::size_t>(es.space().dim());
  CMatrix gram(d, std::vector<Complex>(d, Complex(0.0, 0.0)));
  for (int k = 0; k < es.size(); ++k) {
    const Vec& e = es[k].inner_vec_form().e;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        gram[i][j] += e[static_cast<int>(i)] * std::conj(e[static_cast<int>(j)]);
      }
    }
  }
  // Re-Hermitize to scrub accumulation rounding.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const Complex h = 0.5 * (gram[i][j] + std::conj(gram[j][i]));
      gram[i][j] = h;
      gram[j][i] = std::conj(h);
    }
  }

  constexpr int kMaxIterations = 10000;
  constexpr double kResidualTol = 1e-10;
  int iterations = 0;

  // Squaring phase: power iteration applied to normalized Gram powers
  // G^(2^k). Plain single-vector iteration stalls when the top two
  // eigenvalues nearly coincide; squaring keeps the effective spectral
  // ratio decaying no matter how small the gap is.
  CMatrix b = gram;
  {
    const double f = frobenius(b);
    for (auto& row : b) {
      for (auto& z : row) z *= 1.0 / f;
    }
  }
  constexpr int kSquarings = 35;
  for (int s = 0; s < kSquarings; ++s) {
    ++iterations;
    b = multiply(b, b);
    const double f = frobenius(b);
    if (!(f > 0.0) || !std::isfinite(f)) {
      throw IterationLimitError("dm_constant_c: operator power degenerated");
    }
    for (auto& row : b) {
      for (auto& z : row) z *= 1.0 / f;
    }
  }

  Rng rng(derive_seed(0x7121e00du, "dm_constant_c", d));
  std::vector<Complex> q(d);
  auto vec_norm = [](const std::vector<Complex>& v) {
    double acc = 0.0;
    for (const Complex& z : v) acc += std::norm(z);
    return std::sqrt(acc);
  };
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Complex> start(d);
    for (auto& z : start) z = rng.gaussian_complex();
    // Project onto the dominant eigenspace via the squared powers.
    for (std::size_t i = 0; i < d; ++i) {
      Complex acc(0.0, 0.0);
      for (std::size_t j = 0; j < d; ++j) acc += b[i][j] * start[j];
      q[i] = acc;
    }
    const double n = vec_norm(q);
    if (n > 1e-8) {
      for (auto& z : q) z *= 1.0 / n;
      break;
    }
    if (attempt == 7) {
      throw IterationLimitError("dm_constant_c: could not seed the iteration");
    }
  }

  double lambda = 0.0;
  while (iterations < kMaxIterations) {
    ++iterations;
    std::vector<Complex> z(d, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) z[i] += gram[i][j] * q[j];
    }
    double rq = 0.0;
    for (std::size_t i = 0; i < d; ++i) rq += (z[i] * std::conj(q[i])).real();
    lambda = rq;
    double resid = 0.0;
    for (std::size_t i = 0; i < d; ++i) resid += std::norm(z[i] - lambda * q[i]);
    resid = std::sqrt(resid);
    if (resid <= kResidualTol * std::max(1.0, lambda)) return lambda;
    const double zn = vec_norm(z);
    if (!(zn > 0.0)) throw IterationLimitError("dm_constant_c: iterate vanished");
    for (std::size_t i = 0; i < d; ++i) q[i] = z[i] * (1.0 / zn);
  }
  throw IterationLimitError("dm_constant_c: power iteration did not converge");
}

}  // namespace trirev
