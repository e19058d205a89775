// Copyright 2026 The photosub Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace photosub {

enum class ErrorKind {
  kInvalidDimension,
  kTruncationViolation,
  kDimensionMismatch,
  kNoClickSupport,
  kDegenerateParameters,
  kEmptyDataset,
  kNotPositive,
  kPlusModeNotVacuum,
  kParse,
  kInvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when the '+' mode of an in-phase two-mode dataset fails the vacuum test.
class PlusModeNotVacuum : public Error {
 public:
  PlusModeNotVacuum(double measured_variance, double sigma);

  double measured_variance() const noexcept { return measured_variance_; }
  double sigma() const noexcept { return sigma_; }

 private:
  double measured_variance_;
  double sigma_;
};

}  // namespace photosub
