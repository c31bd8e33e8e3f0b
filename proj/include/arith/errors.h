// Copyright 2026 The Arith Authors
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

#ifndef ARITH_ERRORS_H_
#define ARITH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace arith {

// Argument outside the documented domain (t <= 0, k = 0, |theta| > pi, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A truncation policy ran out of terms before its stopping rule fired.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An analytic value sits too far from every admissible integer to round.
class AmbiguousClassification : public std::runtime_error {
 public:
  AmbiguousClassification(const std::string& what, double value,
                          double residual)
      : std::runtime_error(what), value_(value), residual_(residual) {}
  double value() const { return value_; }
  double residual() const { return residual_; }

 private:
  double value_;
  double residual_;
};

}  // namespace arith

#endif  // ARITH_ERRORS_H_
