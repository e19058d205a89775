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

#include "photosub/error.hpp"

#include <sstream>

namespace photosub {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidDimension: return "invalid-dimension";
    case ErrorKind::kTruncationViolation: return "truncation-violation";
    case ErrorKind::kDimensionMismatch: return "dimension-mismatch";
    case ErrorKind::kNoClickSupport: return "no-click-support";
    case ErrorKind::kDegenerateParameters: return "degenerate-parameters";
    case ErrorKind::kEmptyDataset: return "empty-dataset";
    case ErrorKind::kNotPositive: return "not-positive";
    case ErrorKind::kPlusModeNotVacuum: return "plus-mode-not-vacuum";
    case ErrorKind::kParse: return "parse-error";
    case ErrorKind::kInvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

namespace {
std::string plus_mode_message(double variance, double sigma) {
  std::ostringstream os;
  os << "'+' mode quadrature variance " << variance << " differs from vacuum 0.5 by more than 3 sigma (sigma = "
     << sigma << ")";
  return os.str();
}
}  // namespace

PlusModeNotVacuum::PlusModeNotVacuum(double measured_variance, double sigma)
    : Error(ErrorKind::kPlusModeNotVacuum, plus_mode_message(measured_variance, sigma)),
      measured_variance_(measured_variance),
      sigma_(sigma) {}

}  // namespace photosub
