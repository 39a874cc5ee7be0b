// Copyright 2026 The dilaton-steering Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace dilaton {

/// A value violates the invariants of its type (trace, Hermiticity, PSD, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called with arguments outside its domain.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A 4x4 matrix is not of X shape. Carries the first offending entry.
class StructureError : public std::domain_error {
 public:
  StructureError(int row, int col, double modulus);

  int row() const { return row_; }
  int col() const { return col_; }
  double modulus() const { return modulus_; }

 private:
  int row_;
  int col_;
  double modulus_;
};

/// A bracketing search found no sign change in its interval.
class RootNotFound : public std::runtime_error {
 public:
  RootNotFound(double lo, double hi, double f_lo, double f_hi);

  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  double lo_;
  double hi_;
};

}  // namespace dilaton
