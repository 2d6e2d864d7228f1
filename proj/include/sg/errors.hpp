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

#ifndef SG_ERRORS_HPP
#define SG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sg {

/// Inputs outside an operation's domain: bad player indices, bad
/// parameters, gadget preconditions, or the 64-player capacity limit.
class InvalidInputError : public std::invalid_argument {
 public:
  explicit InvalidInputError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// An exhaustive operation would exceed its enumeration or counting budget.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed game documents (structure, not game axioms).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sg

#endif  // SG_ERRORS_HPP
