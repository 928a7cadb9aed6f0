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

#ifndef TRIREV_REPORT_HPP
#define TRIREV_REPORT_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "trirev/errors.hpp"

namespace trirev {

/// Identity of an implemented reverse bound.
enum class BoundId {
  dm_multiplicative,       // r * sum||x_i|| <= ||sum x_i||, unit functional
  dm_m_functional,         // (sum r_k^2 / c) * sum||x_i|| <= ||sum x_i||
  dm_orthonormal,          // sqrt(sum r_k^2) * sum||x_i|| <= ||sum x_i||
  additive_reverse,        // sum||x_i|| - ||sum x_i|| <= sum k_i
  m_additive,              // sum||x_i|| <= ||avg F|| ||sum x_i|| + avg defects
  m_additive_coarse,       // unit-norm family: ||sum x_i|| + avg defects
  m_additive_inner,        // inner-space version with vector certificates
  m_additive_orthogonal,   // orthogonal family rhs via sqrt(sum ||e_k||^2)/m
  m_additive_orthonormal,  // orthonormal family rhs via sqrt(m)/m
  m_additive_ball,         // defects replaced by radii^2 / 2
  m_additive_interval,     // defects replaced by interval spread terms
  schwarz_ball,            // ||x||||a|| - Re<x,a> <= r^2/2
  schwarz_interval,        // ... <= (hi-lo)^2/(4(hi+lo)) ||y||^2
  complex_l1,              // plane bounds from the propositions on |.|_1
  complex_linf,            //   ... |.|_inf
  complex_l2p,             //   ... |.|_{2p}
};

std::string to_string(BoundId id);
BoundId bound_id_from_string(const std::string& name);

/// Dense nonnegative n x m matrix of admissible defects/radii.
class Matrix {
 public:
  Matrix(int rows, int cols, double fill = 0.0);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double at(int i, int j) const { return data_[index(i, j)]; }
  void set(int i, int j, double v) { data_[index(i, j)] = v; }
  double sum() const;

 private:
  std::size_t index(int i, int j) const;

  int rows_;
  int cols_;
  std::vector<double> data_;
};

/// Throws unless every entry is finite and >= min_value.
void validate_entries_at_least(const Matrix& m, double min_value,
                               const std::string& what);

/// Per-pair interval endpoints 0 < lo_ik <= hi_ik.
struct IntervalMatrix {
  Matrix lo;
  Matrix hi;

  IntervalMatrix(Matrix lo_in, Matrix hi_in);
};

/// Admissible slack data for the additive hypotheses.
struct AdditiveK {
  std::vector<double> k;  // per summand, >= 0
};

using DefectData =
    std::variant<AdditiveK, Matrix, IntervalMatrix>;

/// Multiplicative-reverse constants.
struct Constants {
  double r = 0.0;
  std::vector<double> r_k;
  double c = 1.0;
};

/// Outcome of evaluating one bound on one instance. lhs <= rhs is the
/// verified inequality; slack = rhs - lhs. hypothesis_residuals are the
/// one-sided admissibility margins (an instance is only evaluated when all
/// of them are >= -1e-12, so slack >= -tolerance is guaranteed).
/// witness_conditions carry the residuals of the equality characterisation.
struct BoundReport {
  BoundId bound_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  std::map<std::string, double> hypothesis_residuals;
  bool equality = false;  // |slack| <= tol * max(1, |rhs|)
  std::map<std::string, double> witness_conditions;
  std::vector<std::string> interpretations;
};

}  // namespace trirev

#endif  // TRIREV_REPORT_HPP
