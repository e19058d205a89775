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

#include "photosub/conventions.hpp"

#include <cmath>

#include "photosub/error.hpp"

namespace photosub {

double db_to_r(double db) { return db / kDbPerNeper; }

double r_to_db(double r) { return r * kDbPerNeper; }

double to_db(double variance) {
  if (!(variance > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "variance must be positive to express in dB");
  }
  return -10.0 * std::log10(variance / kVacuumVariance);
}

}  // namespace photosub
