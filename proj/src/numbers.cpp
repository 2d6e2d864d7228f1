// Copyright 2026 The sgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sg/numbers.hpp"

#include <stdexcept>

namespace sg {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  BigInt out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

BigInt pow2(int n) {
  if (n < 0) throw std::invalid_argument("negative power of two");
  return BigInt(1) << n;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

std::string to_fraction(const BigRat& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace sg
