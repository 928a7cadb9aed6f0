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

#include "trirev/report.hpp"

#include <array>
#include <cmath>

namespace trirev {

namespace {

struct IdName {
  BoundId id;
  const char* name;
};

constexpr std::array<IdName, 16> kIdNames = {{
    {BoundId::dm_multiplicative, "dm_multiplicative"},
    {BoundId::dm_m_functional, "dm_m_functional"},
    {BoundId::dm_orthonormal, "dm_orthonormal"},
    {BoundId::additive_reverse, "additive_reverse"},
    {BoundId::m_additive, "m_additive"},
    {BoundId::m_additive_coarse, "m_additive_coarse"},
    {BoundId::m_additive_inner, "m_additive_inner"},
    {BoundId::m_additive_orthogonal, "m_additive_orthogonal"},
    {BoundId::m_additive_orthonormal, "m_additive_orthonormal"},
    {BoundId::m_additive_ball, "m_additive_ball"},
    {BoundId::m_additive_interval, "m_additive_interval"},
    {BoundId::schwarz_ball, "schwarz_ball"},
    {BoundId::schwarz_interval, "schwarz_interval"},
    {BoundId::complex_l1, "complex_l1"},
    {BoundId::complex_linf, "complex_linf"},
    {BoundId::complex_l2p, "complex_l2p"},
}};

}  // namespace

std::string to_string(BoundId id) {
  for (const auto& entry : kIdNames) {
    if (entry.id == id) return entry.name;
  }
  throw InvalidParameterError("unknown bound id");
}

BoundId bound_id_from_string(const std::string& name) {
  for (const auto& entry : kIdNames) {
    if (name == entry.name) return entry.id;
  }
  throw ParseError("unknown bound id: " + name);
}

Matrix::Matrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
  if (rows < 1 || cols < 1) throw InvalidParameterError("Matrix: needs positive shape");
}

std::size_t Matrix::index(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw ShapeError("Matrix: index out of range");
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
         static_cast<std::size_t>(j);
}

double Matrix::sum() const {
  double acc = 0.0;
  for (double v : data_) acc += v;
  return acc;
}

void validate_entries_at_least(const Matrix& m, double min_value,
                               const std::string& what) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      const double v = m.at(i, j);
      if (!std::isfinite(v) || v < min_value) {
        throw InvalidParameterError(what + ": entry out of range");
      }
    }
  }
}

IntervalMatrix::IntervalMatrix(Matrix lo_in, Matrix hi_in)
    : lo(std::move(lo_in)), hi(std::move(hi_in)) {
  if (lo.rows() != hi.rows() || lo.cols() != hi.cols()) {
    throw ShapeError("IntervalMatrix: endpoint shapes differ");
  }
  for (int i = 0; i < lo.rows(); ++i) {
    for (int j = 0; j < lo.cols(); ++j) {
      const double l = lo.at(i, j);
      const double h = hi.at(i, j);
      if (!std::isfinite(l) || !std::isfinite(h) || !(l > 0.0) || h < l) {
        throw InvalidParameterError("IntervalMatrix: need hi >= lo > 0");
      }
    }
  }
}

}  // namespace trirev
