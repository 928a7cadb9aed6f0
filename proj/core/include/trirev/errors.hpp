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

#ifndef TRIREV_ERRORS_HPP
#define TRIREV_ERRORS_HPP

#include <map>
#include <stdexcept>
#include <string>

namespace trirev {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A scalar argument is outside its admissible range (p < 1, NaN input, ...).
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

/// Dimension or space mismatch between operands.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Structurally degenerate input (zero vector where a direction is needed,
/// vanishing certificate sum, ...).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// A bound's hypothesis fails beyond the admissibility band. Carries the
/// named residuals so callers can report what exactly was violated.
class HypothesisViolationError : public Error {
 public:
  HypothesisViolationError(const std::string& message,
                           std::map<std::string, double> residuals)
      : Error(message), residuals_(std::move(residuals)) {}

  const std::map<std::string, double>& residuals() const { return residuals_; }

 private:
  std::map<std::string, double> residuals_;
};

/// An iterative solver exhausted its iteration budget.
class IterationLimitError : public Error {
 public:
  using Error::Error;
};

/// A certificate set mixes variants or spaces, or is empty.
class InvalidSetError : public Error {
 public:
  using Error::Error;
};

/// The request is outside the supported domain (non-smooth p, oracle size cap).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A random-instance generator received an infeasible request.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace trirev

#endif  // TRIREV_ERRORS_HPP
