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

#ifndef ARITH_COMPENSATED_H_
#define ARITH_COMPENSATED_H_

#include <cmath>
#include <complex>
#include <limits>

namespace arith {

// Neumaier's variant of Kahan summation. Also tracks sum |x_i| so callers
// can bound the accumulated rounding error.
class CompensatedSum {
 public:
  void Add(double x) {
    const double s = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - s) + x;
    } else {
      comp_ += (x - s) + sum_;
    }
    sum_ = s;
    abs_ += std::fabs(x);
  }
  double Value() const { return sum_ + comp_; }
  double AbsSum() const { return abs_; }
  // A generous bound on the rounding error of Value().
  double RoundingBound() const {
    return 8.0 * std::numeric_limits<double>::epsilon() * abs_;
  }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  double abs_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void Add(std::complex<double> z) {
    re_.Add(z.real());
    im_.Add(z.imag());
  }
  std::complex<double> Value() const { return {re_.Value(), im_.Value()}; }
  double RoundingBound() const {
    return re_.RoundingBound() + im_.RoundingBound();
  }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace arith

#endif  // ARITH_COMPENSATED_H_
