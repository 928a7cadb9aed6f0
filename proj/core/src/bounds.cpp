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

#include "trirev/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace trirev {

namespace {

// Note on the equality-condition texts: for the averaged-functional bounds
// the equality characterisation is stated as a sufficient pair of
// conditions; the reports carry the residuals of both so callers can check
// either direction.
const char* kSummedDefectNote =
    "equality condition sums defects over all summand/functional pairs";
const char* kSufficientNote =
    "equality conditions reported as sufficient; necessity checked empirically";
const char* kUnitAnchorNote =
    "anchor vectors are required to be unit norm for the defect substitution";
const char* kSemiInnerNote =
    "scaled-sum relation for the semi-inner-product rule read as an upper bound";

void require_admissible(const std::map<std::string, double>& residuals,
                        const std::string& what) {
  for (const auto& [name, value] : residuals) {
    if (value < -kHypothesisBand) {
      throw HypothesisViolationError(what + ": hypothesis violated (" + name + ")",
                                     residuals);
    }
  }
}

BoundReport finish(BoundId id, double lhs, double rhs,
                   std::map<std::string, double> hypothesis,
                   std::map<std::string, double> witness,
                   std::vector<std::string> interpretations, double tol) {
  BoundReport report;
  report.bound_id = id;
  report.lhs = lhs;
  report.rhs = rhs;
  report.slack = rhs - lhs;
  report.hypothesis_residuals = std::move(hypothesis);
  report.equality = std::abs(report.slack) <= tol * std::max(1.0, std::abs(rhs));
  report.witness_conditions = std::move(witness);
  report.interpretations = std::move(interpretations);
  return report;
}

double unit_norm_margin(const LinearFunctional& f, double tol) {
  return tol - std::abs(f.norm() - 1.0);
}

std::vector<double> tuple_norms(const VectorTuple& xs) {
  std::vector<double> out(static_cast<std::size_t>(xs.count()));
  for (int i = 0; i < xs.count(); ++i) out[static_cast<std::size_t>(i)] = norm(xs[i], xs.space());
  return out;
}

double total(std::span<const double> v) {
  double acc = 0.0;
  for (double t : v) acc += t;
  return acc;
}

bool is_semi_inner(const LinearFunctional& f) {
  return dynamic_cast<const SemiInnerFunctional*>(&f) != nullptr;
}

// Anchor family helpers shared by the inner-space bounds.

void validate_anchors(const Space& space, const std::vector<Vec>& eks) {
  if (!space.is_inner()) {
    throw InvalidParameterError("anchor-family bounds require an inner space");
  }
  if (eks.empty()) throw InvalidSetError("anchor family must be nonempty");
  for (const Vec& e : eks) {
    validate_member(space, e);
    if (euclidean_norm(e) == 0.0) {
      throw DegenerateInputError("anchor family contains a zero vector");
    }
  }
}

void check_defect_shape(const Matrix& M, int n, int m, const std::string& what) {
  if (M.rows() != n || M.cols() != m) throw ShapeError(what + ": defect matrix shape mismatch");
  validate_entries_at_least(M, 0.0, what + ": defects");
}

double anchor_unit_margin(const std::vector<Vec>& eks, double tol) {
  double max_dev = 0.0;
  for (const Vec& e : eks) max_dev = std::max(max_dev, std::abs(euclidean_norm(e) - 1.0));
  return tol - max_dev;
}

}  // namespace

double tightest_r(const VectorTuple& xs, const LinearFunctional& f, double tol) {
  if (!(xs.space() == f.space())) throw ShapeError("tightest_r: space mismatch");
  if (unit_norm_margin(f, tol) < -kHypothesisBand) {
    throw HypothesisViolationError(
        "tightest_r: functional must have unit norm",
        {{"functional_unit_margin", unit_norm_margin(f, tol)}});
  }
  double r = std::numeric_limits<double>::infinity();
  for (int i = 0; i < xs.count(); ++i) {
    const double ni = norm(xs[i], xs.space());
    if (ni == 0.0) throw DegenerateInputError("tightest_r: zero summand");
    r = std::min(r, f.eval(xs[i]).real() / ni);
  }
  return std::max(0.0, r);
}

double tightest_r(const VectorTuple& xs, const Certificate& f, double tol) {
  return tightest_r(xs, CertificateFunctional(f), tol);
}

BoundReport dm_multiplicative(const VectorTuple& xs, const LinearFunctional& f,
                              double r, double tol) {
  if (!(xs.space() == f.space())) throw ShapeError("dm_multiplicative: space mismatch");
  const std::vector<double> norms = tuple_norms(xs);

  std::map<std::string, double> hyp;
  hyp["functional_unit_margin"] = unit_norm_margin(f, tol);
  hyp["r_nonnegative"] = r;
  double min_cone = std::numeric_limits<double>::infinity();
  for (int i = 0; i < xs.count(); ++i) {
    min_cone = std::min(min_cone, f.eval(xs[i]).real() - r * norms[static_cast<std::size_t>(i)]);
  }
  hyp["min_cone_residual"] = min_cone;
  require_admissible(hyp, "dm_multiplicative");

  const Vec s = sum(xs.items());
  const double lhs = r * total(norms);
  const double rhs = norm(s, xs.space());
  const Complex fs = f.eval(s);

  std::map<std::string, double> wit;
  wit["functional_vs_scaled_sum"] = std::abs(fs - Complex(lhs, 0.0));
  wit["functional_vs_norm_of_sum"] = std::abs(fs - Complex(rhs, 0.0));
  std::vector<std::string> notes;
  if (is_semi_inner(f)) notes.push_back(kSemiInnerNote);
  return finish(BoundId::dm_multiplicative, lhs, rhs, std::move(hyp), std::move(wit),
                std::move(notes), tol);
}

BoundReport dm_multiplicative(const VectorTuple& xs, const Certificate& f,
                              double r, double tol) {
  return dm_multiplicative(xs, CertificateFunctional(f), r, tol);
}

BoundReport dm_m_functional(const VectorTuple& xs, const CertificateSet& es,
                            std::span<const double> rks, double tol) {
  if (!(xs.space() == es.space())) throw ShapeError("dm_m_functional: space mismatch");
  if (!es.is_inner_vec()) {
    throw InvalidParameterError("dm_m_functional: requires inner-vector certificates");
  }
  const int m = es.size();
  if (static_cast<int>(rks.size()) != m) throw ShapeError("dm_m_functional: need one r_k per certificate");
  const std::vector<double> norms = tuple_norms(xs);

  std::map<std::string, double> hyp;
  double max_dev = 0.0;
  for (int k = 0; k < m; ++k) max_dev = std::max(max_dev, std::abs(functional_norm(es[k]) - 1.0));
  hyp["unit_norm_margin"] = tol - max_dev;
  double min_rk = std::numeric_limits<double>::infinity();
  double min_cone = std::numeric_limits<double>::infinity();
  for (int k = 0; k < m; ++k) {
    min_rk = std::min(min_rk, rks[static_cast<std::size_t>(k)]);
    for (int i = 0; i < xs.count(); ++i) {
      min_cone = std::min(min_cone, apply(es[k], xs[i]).real() -
                                        rks[static_cast<std::size_t>(k)] * norms[static_cast<std::size_t>(i)]);
    }
  }
  hyp["min_r_k"] = min_rk;
  hyp["min_cone_residual"] = min_cone;
  require_admissible(hyp, "dm_m_functional");

  const double c = dm_constant_c(es, tol);
  double sum_rk2 = 0.0;
  for (double rk : rks) sum_rk2 += rk * rk;

  const Vec s = sum(xs.items());
  const double lhs = (sum_rk2 / c) * total(norms);
  const double rhs = norm(s, xs.space());

  std::map<std::string, double> wit;
  double max_fk_dev = 0.0;
  double quad = 0.0;
  const double sum_norms = total(norms);
  for (int k = 0; k < m; ++k) {
    const Complex fk = apply(es[k], s);
    max_fk_dev = std::max(max_fk_dev,
                          std::abs(fk - Complex(rks[static_cast<std::size_t>(k)] * sum_norms, 0.0)));
    quad += std::norm(fk);
  }
  wit["max_functional_vs_scaled_sum"] = max_fk_dev;
  wit["quadratic_sum_vs_c_norm"] = std::abs(quad - c * rhs * rhs);
  return finish(BoundId::dm_m_functional, lhs, rhs, std::move(hyp), std::move(wit),
                {kSufficientNote}, tol);
}

BoundReport dm_orthonormal(const VectorTuple& xs, const std::vector<Vec>& eks,
                           std::span<const double> rks, double tol) {
  validate_anchors(xs.space(), eks);
  const int m = static_cast<int>(eks.size());
  if (static_cast<int>(rks.size()) != m) throw ShapeError("dm_orthonormal: need one r_k per anchor");
  const std::vector<double> norms = tuple_norms(xs);

  std::map<std::string, double> hyp;
  double max_dev = 0.0;
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j <= k; ++j) {
      const Complex g = inner(eks[static_cast<std::size_t>(k)], eks[static_cast<std::size_t>(j)]);
      const Complex expected = (j == k) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      max_dev = std::max(max_dev, std::abs(g - expected));
    }
  }
  hyp["orthonormal_margin"] = tol - max_dev;
  if (hyp["orthonormal_margin"] < -kHypothesisBand) {
    throw HypothesisViolationError("dm_orthonormal: anchors are not orthonormal", hyp);
  }
  double min_rk = std::numeric_limits<double>::infinity();
  double min_cone = std::numeric_limits<double>::infinity();
  for (int k = 0; k < m; ++k) {
    min_rk = std::min(min_rk, rks[static_cast<std::size_t>(k)]);
    for (int i = 0; i < xs.count(); ++i) {
      min_cone = std::min(min_cone, inner(xs[i], eks[static_cast<std::size_t>(k)]).real() -
                                        rks[static_cast<std::size_t>(k)] * norms[static_cast<std::size_t>(i)]);
    }
  }
  hyp["min_r_k"] = min_rk;
  hyp["min_cone_residual"] = min_cone;
  require_admissible(hyp, "dm_orthonormal");

  double sum_rk2 = 0.0;
  for (double rk : rks) sum_rk2 += rk * rk;
  const Vec s = sum(xs.items());
  const double lhs = std::sqrt(sum_rk2) * total(norms);
  const double rhs = norm(s, xs.space());

  // Equality witness: sum x_i = (sum ||x_i||) * sum_k r_k e_k.
  Vec target = rks[0] * eks[0];
  for (int k = 1; k < m; ++k) target = target + rks[static_cast<std::size_t>(k)] * eks[static_cast<std::size_t>(k)];
  target = total(norms) * target;
  std::map<std::string, double> wit;
  wit["collinearity_residual"] = euclidean_norm(s - target);
  return finish(BoundId::dm_orthonormal, lhs, rhs, std::move(hyp), std::move(wit), {}, tol);
}

std::vector<double> additive_defects(const VectorTuple& xs,
                                     const LinearFunctional& f, double tol) {
  if (!(xs.space() == f.space())) throw ShapeError("additive_defects: space mismatch");
  if (unit_norm_margin(f, tol) < -kHypothesisBand) {
    throw HypothesisViolationError(
        "additive_defects: functional must have unit norm",
        {{"functional_unit_margin", unit_norm_margin(f, tol)}});
  }
  std::vector<double> ks(static_cast<std::size_t>(xs.count()));
  for (int i = 0; i < xs.count(); ++i) {
    const double defect = norm(xs[i], xs.space()) - f.eval(xs[i]).real();
    ks[static_cast<std::size_t>(i)] = std::max(0.0, defect);
  }
  return ks;
}

std::vector<double> additive_defects(const VectorTuple& xs, const Certificate& f,
                                     double tol) {
  return additive_defects(xs, CertificateFunctional(f), tol);
}

BoundReport additive_reverse(const VectorTuple& xs, const LinearFunctional& f,
                             std::span<const double> ks, double tol) {
  if (!(xs.space() == f.space())) throw ShapeError("additive_reverse: space mismatch");
  if (static_cast<int>(ks.size()) != xs.count()) {
    throw ShapeError("additive_reverse: need one defect per summand");
  }
  const std::vector<double> norms = tuple_norms(xs);

  std::map<std::string, double> hyp;
  hyp["functional_unit_margin"] = unit_norm_margin(f, tol);
  double min_k = std::numeric_limits<double>::infinity();
  double min_slack = std::numeric_limits<double>::infinity();
  for (int i = 0; i < xs.count(); ++i) {
    const double ki = ks[static_cast<std::size_t>(i)];
    min_k = std::min(min_k, ki);
    min_slack = std::min(min_slack, ki - (norms[static_cast<std::size_t>(i)] - f.eval(xs[i]).real()));
  }
  hyp["min_k"] = min_k;
  hyp["min_defect_residual"] = min_slack;
  require_admissible(hyp, "additive_reverse");

  const Vec s = sum(xs.items());
  const double norm_sum = norm(s, xs.space());
  const double lhs = total(norms) - norm_sum;
  const double rhs = total(ks);
  const Complex fs = f.eval(s);

  std::map<std::string, double> wit;
  wit["functional_vs_norm_of_sum"] = std::abs(fs - Complex(norm_sum, 0.0));
  wit["functional_vs_sum_minus_defects"] = std::abs(fs - Complex(total(norms) - rhs, 0.0));
  std::vector<std::string> notes;
  if (is_semi_inner(f)) notes.push_back(kSemiInnerNote);
  return finish(BoundId::additive_reverse, lhs, rhs, std::move(hyp), std::move(wit),
                std::move(notes), tol);
}

BoundReport additive_reverse(const VectorTuple& xs, const Certificate& f,
                             std::span<const double> ks, double tol) {
  return additive_reverse(xs, CertificateFunctional(f), ks, tol);
}

namespace {

// Shared core of the averaged-functional additive bounds: hypothesis
// ||x_i|| - Re F_k(x_i) <= M_ik, conclusion
//   sum ||x_i|| <= factor * ||sum x_i|| + (1/m) sum_ik M_ik.
struct AveragedAdditive {
  std::map<std::string, double> hyp;
  std::vector<double> norms;
  Vec s;
  double sum_norms;
  double avg_defects;
};

AveragedAdditive averaged_additive_core(const VectorTuple& xs,
                                        const std::vector<Complex>& fk_of_xi,
                                        const Matrix& M, const std::string& what) {
  const int n = xs.count();
  const int m = M.cols();
  AveragedAdditive core{{}, tuple_norms(xs), sum(xs.items()), 0.0, 0.0};
  double min_defect = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < m; ++k) {
      const double re = fk_of_xi[static_cast<std::size_t>(i * m + k)].real();
      min_defect = std::min(min_defect,
                            M.at(i, k) - (core.norms[static_cast<std::size_t>(i)] - re));
    }
  }
  core.hyp["min_defect_residual"] = min_defect;
  require_admissible(core.hyp, what);
  core.sum_norms = total(core.norms);
  core.avg_defects = M.sum() / static_cast<double>(m);
  return core;
}

std::vector<Complex> evaluate_family_cert(const VectorTuple& xs,
                                          const CertificateSet& fs) {
  std::vector<Complex> vals(static_cast<std::size_t>(xs.count() * fs.size()));
  for (int i = 0; i < xs.count(); ++i) {
    for (int k = 0; k < fs.size(); ++k) {
      vals[static_cast<std::size_t>(i * fs.size() + k)] = apply(fs[k], xs[i]);
    }
  }
  return vals;
}

std::vector<Complex> evaluate_family_anchor(const VectorTuple& xs,
                                            const std::vector<Vec>& eks) {
  const int m = static_cast<int>(eks.size());
  std::vector<Complex> vals(static_cast<std::size_t>(xs.count() * m));
  for (int i = 0; i < xs.count(); ++i) {
    for (int k = 0; k < m; ++k) {
      vals[static_cast<std::size_t>(i * m + k)] = inner(xs[i], eks[static_cast<std::size_t>(k)]);
    }
  }
  return vals;
}

}  // namespace

BoundReport m_functional_additive(const VectorTuple& xs, const CertificateSet& fs,
                                  const Matrix& M, double tol) {
  if (!(xs.space() == fs.space())) throw ShapeError("m_functional_additive: space mismatch");
  check_defect_shape(M, xs.count(), fs.size(), "m_functional_additive");
  const int m = fs.size();
  auto core = averaged_additive_core(xs, evaluate_family_cert(xs, fs), M,
                                     "m_functional_additive");

  const Certificate avg = fs.average();
  const double avg_norm = functional_norm(avg);
  const double norm_sum = norm(core.s, xs.space());
  const double lhs = core.sum_norms;
  const double rhs = avg_norm * norm_sum + core.avg_defects;

  Complex avg_at_sum(0.0, 0.0);
  for (int k = 0; k < m; ++k) avg_at_sum += apply(fs[k], core.s);
  avg_at_sum *= 1.0 / static_cast<double>(m);

  std::map<std::string, double> wit;
  wit["avg_functional_vs_norm_product"] = std::abs(avg_at_sum - Complex(avg_norm * norm_sum, 0.0));
  wit["avg_functional_vs_sum_minus_defects"] =
      std::abs(avg_at_sum - Complex(core.sum_norms - core.avg_defects, 0.0));
  return finish(BoundId::m_additive, lhs, rhs, std::move(core.hyp), std::move(wit),
                {kSummedDefectNote, kSufficientNote}, tol);
}

BoundReport m_functional_additive_coarse(const VectorTuple& xs,
                                         const CertificateSet& fs, const Matrix& M,
                                         double tol) {
  if (!(xs.space() == fs.space())) throw ShapeError("m_functional_additive_coarse: space mismatch");
  check_defect_shape(M, xs.count(), fs.size(), "m_functional_additive_coarse");
  double max_dev = 0.0;
  for (int k = 0; k < fs.size(); ++k) {
    max_dev = std::max(max_dev, std::abs(functional_norm(fs[k]) - 1.0));
  }
  auto core = averaged_additive_core(xs, evaluate_family_cert(xs, fs), M,
                                     "m_functional_additive_coarse");
  core.hyp["unit_norm_margin"] = tol - max_dev;
  require_admissible(core.hyp, "m_functional_additive_coarse");

  const double norm_sum = norm(core.s, xs.space());
  const double lhs = core.sum_norms;
  const double rhs = norm_sum + core.avg_defects;
  return finish(BoundId::m_additive_coarse, lhs, rhs, std::move(core.hyp), {},
                {kSummedDefectNote}, tol);
}

namespace {

std::map<std::string, double> inner_additive_witness(const Vec& s,
                                                     const std::vector<Vec>& eks,
                                                     double sum_norms,
                                                     double avg_defects) {
  Vec anchor_sum = eks[0];
  for (std::size_t k = 1; k < eks.size(); ++k) anchor_sum = anchor_sum + eks[k];
  const double anchor_norm = euclidean_norm(anchor_sum);
  if (anchor_norm == 0.0) {
    throw DegenerateInputError("anchor sum vanishes; the equality direction is undefined");
  }
  const double m = static_cast<double>(eks.size());
  const double coefficient = m * (sum_norms - avg_defects) / (anchor_norm * anchor_norm);
  std::map<std::string, double> wit;
  wit["collinearity_residual"] = euclidean_norm(s - coefficient * anchor_sum);
  wit["sum_norms_minus_defects"] = sum_norms - avg_defects;
  return wit;
}

}  // namespace

BoundReport m_additive_inner(const VectorTuple& xs, const std::vector<Vec>& eks,
                             const Matrix& M, double tol) {
  validate_anchors(xs.space(), eks);
  const int m = static_cast<int>(eks.size());
  check_defect_shape(M, xs.count(), m, "m_additive_inner");

  Vec anchor_sum = eks[0];
  for (int k = 1; k < m; ++k) anchor_sum = anchor_sum + eks[static_cast<std::size_t>(k)];
  const double anchor_norm = euclidean_norm(anchor_sum);
  if (anchor_norm == 0.0) {
    throw DegenerateInputError("m_additive_inner: anchor sum vanishes");
  }

  auto core = averaged_additive_core(xs, evaluate_family_anchor(xs, eks), M,
                                     "m_additive_inner");
  const double norm_sum = norm(core.s, xs.space());
  const double lhs = core.sum_norms;
  const double rhs = (anchor_norm / static_cast<double>(m)) * norm_sum + core.avg_defects;

  auto wit = inner_additive_witness(core.s, eks, core.sum_norms, core.avg_defects);
  return finish(BoundId::m_additive_inner, lhs, rhs, std::move(core.hyp), std::move(wit),
                {kSummedDefectNote}, tol);
}

std::pair<VectorTuple, Matrix> make_equality_instance(const Space& space,
                                                      const std::vector<Vec>& eks,
                                                      std::span<const double> ts) {
  validate_anchors(space, eks);
  if (ts.empty()) throw InvalidParameterError("make_equality_instance: needs n >= 1 scales");
  for (double t : ts) {
    if (!(t > 0.0)) throw InvalidParameterError("make_equality_instance: scales must be positive");
  }
  for (const Vec& e : eks) {
    if (std::abs(euclidean_norm(e) - 1.0) > kDefaultTolerance) {
      throw HypothesisViolationError("make_equality_instance: anchors must be unit norm",
                                     {{"unit_norm_margin", anchor_unit_margin(eks, kDefaultTolerance)}});
    }
  }
  Vec anchor_sum = eks[0];
  for (std::size_t k = 1; k < eks.size(); ++k) anchor_sum = anchor_sum + eks[k];
  if (euclidean_norm(anchor_sum) == 0.0) {
    throw DegenerateInputError("make_equality_instance: anchor sum vanishes");
  }

  const int n = static_cast<int>(ts.size());
  const int m = static_cast<int>(eks.size());
  std::vector<Vec> items;
  items.reserve(static_cast<std::size_t>(n));
  Matrix M(n, m);
  for (int i = 0; i < n; ++i) {
    Vec xi = ts[static_cast<std::size_t>(i)] * anchor_sum;
    const double ni = euclidean_norm(xi);
    for (int k = 0; k < m; ++k) {
      // Nonnegative by the Schwarz inequality against a unit anchor.
      M.set(i, k, ni - inner(xi, eks[static_cast<std::size_t>(k)]).real());
    }
    items.push_back(std::move(xi));
  }
  return {VectorTuple(space, std::move(items)), std::move(M)};
}

BoundReport orthonormal_additive(const VectorTuple& xs, const std::vector<Vec>& eks,
                                 const Matrix& M, double tol) {
  validate_anchors(xs.space(), eks);
  const int m = static_cast<int>(eks.size());
  check_defect_shape(M, xs.count(), m, "orthonormal_additive");

  double max_cross = 0.0;
  double norm2_sum = 0.0;
  bool unit = true;
  for (int k = 0; k < m; ++k) {
    const double nk = euclidean_norm(eks[static_cast<std::size_t>(k)]);
    norm2_sum += nk * nk;
    if (std::abs(nk - 1.0) > tol) unit = false;
    for (int j = 0; j < k; ++j) {
      max_cross = std::max(max_cross,
                           std::abs(inner(eks[static_cast<std::size_t>(k)], eks[static_cast<std::size_t>(j)])));
    }
  }
  std::map<std::string, double> pre;
  pre["orthogonal_margin"] = tol - max_cross;
  if (pre["orthogonal_margin"] < -kHypothesisBand) {
    throw HypothesisViolationError("orthonormal_additive: anchors are not orthogonal", pre);
  }

  auto core = averaged_additive_core(xs, evaluate_family_anchor(xs, eks), M,
                                     "orthonormal_additive");
  core.hyp["orthogonal_margin"] = pre["orthogonal_margin"];
  const double norm_sum = norm(core.s, xs.space());
  const double lhs = core.sum_norms;
  const double factor = std::sqrt(norm2_sum) / static_cast<double>(m);
  const double rhs = factor * norm_sum + core.avg_defects;

  auto wit = inner_additive_witness(core.s, eks, core.sum_norms, core.avg_defects);
  const BoundId id = unit ? BoundId::m_additive_orthonormal : BoundId::m_additive_orthogonal;
  return finish(id, lhs, rhs, std::move(core.hyp), std::move(wit), {kSummedDefectNote}, tol);
}

BoundReport schwarz_defect_ball(const Vec& x, const Vec& a, double r, double tol) {
  if (x.size() != a.size()) throw ShapeError("schwarz_defect_ball: size mismatch");
  if (!(r > 0.0)) throw InvalidParameterError("schwarz_defect_ball: radius must be positive");

  const double dist = euclidean_norm(x - a);
  std::map<std::string, double> hyp;
  hyp["ball_residual"] = r - dist;
  require_admissible(hyp, "schwarz_defect_ball");

  const double nx = euclidean_norm(x);
  const double na = euclidean_norm(a);
  const double lhs = nx * na - inner(x, a).real();
  const double rhs = 0.5 * r * r;

  std::map<std::string, double> wit;
  wit["distance_vs_radius"] = std::abs(dist - r);
  wit["norms_balance"] = std::abs(nx - na);
  return finish(BoundId::schwarz_ball, lhs, rhs, std::move(hyp), std::move(wit), {}, tol);
}

BoundReport schwarz_defect_interval(const Vec& x, const Vec& y, double lo,
                                    double hi, double tol) {
  if (x.size() != y.size()) throw ShapeError("schwarz_defect_interval: size mismatch");
  if (!(lo > 0.0) || !(hi >= lo)) {
    throw InvalidParameterError("schwarz_defect_interval: need hi >= lo > 0");
  }
  const double ny = euclidean_norm(y);
  if (ny == 0.0) throw DegenerateInputError("schwarz_defect_interval: y must be nonzero");

  const double sign_form = inner(hi * y - x, x - lo * y).real();
  std::map<std::string, double> hyp;
  hyp["interval_residual"] = sign_form;
  require_admissible(hyp, "schwarz_defect_interval");

  const double nx = euclidean_norm(x);
  const double lhs = nx * ny - inner(x, y).real();
  const double rhs = 0.25 * (hi - lo) * (hi - lo) / (hi + lo) * ny * ny;

  std::map<std::string, double> wit;
  wit["interval_equality_residual"] = std::abs(sign_form);
  wit["norm_vs_midpoint"] = std::abs(nx - 0.5 * (hi + lo) * ny);
  return finish(BoundId::schwarz_interval, lhs, rhs, std::move(hyp), std::move(wit), {}, tol);
}

std::pair<bool, bool> interval_condition_equivalence(const Vec& x, const Vec& y,
                                                     double lo, double hi) {
  if (x.size() != y.size()) throw ShapeError("interval_condition_equivalence: size mismatch");
  if (!(lo > 0.0) || !(hi >= lo)) {
    throw InvalidParameterError("interval_condition_equivalence: need hi >= lo > 0");
  }
  const double ny = euclidean_norm(y);
  if (ny == 0.0) throw DegenerateInputError("interval_condition_equivalence: y must be nonzero");

  const double sign_form = inner(hi * y - x, x - lo * y).real();
  const double center = 0.5 * (lo + hi);
  const double radius = 0.5 * (hi - lo);
  const double ball_form = radius * ny - euclidean_norm(x - center * y);
  return {sign_form >= 0.0, ball_form >= 0.0};
}

BoundReport ball_condition_bound(const VectorTuple& xs, const std::vector<Vec>& eks,
                                 const Matrix& radii, double tol) {
  validate_anchors(xs.space(), eks);
  const int m = static_cast<int>(eks.size());
  if (radii.rows() != xs.count() || radii.cols() != m) {
    throw ShapeError("ball_condition_bound: radius matrix shape mismatch");
  }
  validate_entries_at_least(radii, 0.0, "ball_condition_bound: radii");

  std::map<std::string, double> hyp;
  hyp["unit_norm_margin"] = anchor_unit_margin(eks, tol);
  if (hyp["unit_norm_margin"] < -kHypothesisBand) {
    throw HypothesisViolationError("ball_condition_bound: anchors must be unit norm", hyp);
  }
  double min_ball = std::numeric_limits<double>::infinity();
  for (int i = 0; i < xs.count(); ++i) {
    for (int k = 0; k < m; ++k) {
      const double dist = euclidean_norm(xs[i] - eks[static_cast<std::size_t>(k)]);
      min_ball = std::min(min_ball, radii.at(i, k) - dist);
    }
  }
  hyp["min_ball_residual"] = min_ball;
  require_admissible(hyp, "ball_condition_bound");

  Vec anchor_sum = eks[0];
  for (int k = 1; k < m; ++k) anchor_sum = anchor_sum + eks[static_cast<std::size_t>(k)];
  const std::vector<double> norms = tuple_norms(xs);
  const Vec s = sum(xs.items());
  const double lhs = total(norms);
  double radius_term = 0.0;
  for (int i = 0; i < xs.count(); ++i) {
    for (int k = 0; k < m; ++k) radius_term += radii.at(i, k) * radii.at(i, k);
  }
  const double rhs = (euclidean_norm(anchor_sum) / static_cast<double>(m)) * norm(s, xs.space()) +
                     radius_term / (2.0 * static_cast<double>(m));

  auto wit = inner_additive_witness(s, eks, lhs, radius_term / (2.0 * static_cast<double>(m)));
  return finish(BoundId::m_additive_ball, lhs, rhs, std::move(hyp), std::move(wit),
                {kUnitAnchorNote}, tol);
}

BoundReport interval_condition_bound(const VectorTuple& xs,
                                     const std::vector<Vec>& eks,
                                     const IntervalMatrix& intervals, double tol) {
  validate_anchors(xs.space(), eks);
  const int m = static_cast<int>(eks.size());
  if (intervals.lo.rows() != xs.count() || intervals.lo.cols() != m) {
    throw ShapeError("interval_condition_bound: interval matrix shape mismatch");
  }

  std::map<std::string, double> hyp;
  hyp["unit_norm_margin"] = anchor_unit_margin(eks, tol);
  if (hyp["unit_norm_margin"] < -kHypothesisBand) {
    throw HypothesisViolationError("interval_condition_bound: anchors must be unit norm", hyp);
  }
  double min_interval = std::numeric_limits<double>::infinity();
  for (int i = 0; i < xs.count(); ++i) {
    for (int k = 0; k < m; ++k) {
      const Vec& e = eks[static_cast<std::size_t>(k)];
      const double lo = intervals.lo.at(i, k);
      const double hi = intervals.hi.at(i, k);
      min_interval = std::min(min_interval, inner(hi * e - xs[i], xs[i] - lo * e).real());
    }
  }
  hyp["min_interval_residual"] = min_interval;
  require_admissible(hyp, "interval_condition_bound");

  Vec anchor_sum = eks[0];
  for (int k = 1; k < m; ++k) anchor_sum = anchor_sum + eks[static_cast<std::size_t>(k)];
  const std::vector<double> norms = tuple_norms(xs);
  const Vec s = sum(xs.items());
  const double lhs = total(norms);
  double spread_term = 0.0;
  for (int i = 0; i < xs.count(); ++i) {
    for (int k = 0; k < m; ++k) {
      const double lo = intervals.lo.at(i, k);
      const double hi = intervals.hi.at(i, k);
      const double ne = euclidean_norm(eks[static_cast<std::size_t>(k)]);
      spread_term += (hi - lo) * (hi - lo) / (hi + lo) * ne * ne;
    }
  }
  const double rhs = (euclidean_norm(anchor_sum) / static_cast<double>(m)) * norm(s, xs.space()) +
                     spread_term / (4.0 * static_cast<double>(m));

  auto wit = inner_additive_witness(s, eks, lhs, spread_term / (4.0 * static_cast<double>(m)));
  return finish(BoundId::m_additive_interval, lhs, rhs, std::move(hyp), std::move(wit),
                {kUnitAnchorNote, "interval endpoints are taken per summand/anchor pair"}, tol);
}

}  // namespace trirev
