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

#ifndef SG_NUMBERS_HPP
#define SG_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sg {

// All analysis results are exact: arbitrary-precision integers for raw
// values and counts, rationals for normalized indices. No floating point.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
BigInt pow2(int n);

/// Decimal representation, e.g. "1267650600228229401496703205376".
std::string to_decimal(const BigInt& value);

/// Canonical "p/q" in lowest terms with q >= 1, e.g. "3/5", "0/1", "2/1".
std::string to_fraction(const BigRat& value);

}  // namespace sg

#endif  // SG_NUMBERS_HPP
