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

// State preparation and conditioning channels for photon-subtraction
// experiments: squeezed-vacuum source, pure loss, tap-and-click subtraction
// (plain or with a displaced trigger), 50:50 splitting and the distillation
// scenarios built from them.

#include "photosub/channel.hpp"
#include "photosub/fock.hpp"

namespace photosub {

/// Tap beamsplitter + on/off trigger detector.
///
/// A fraction `reflectivity` of the signal is tapped off, displaced by
/// `displacement` (zero for plain subtraction), attenuated by the trigger
/// efficiency and sent to a non-photon-number-resolving detector.
struct TapChannel {
  double reflectivity = 0.05;
  double trigger_efficiency = 1.0;
  Complex displacement{0.0, 0.0};

  /// Throws kInvalidArgument unless 0 <= R < 0.5 and 0 < eta_t <= 1.
  void validate() const;
};

template <typename State>
struct ConditionalResult {
  State state;                 ///< normalized conditional state
  double success_probability;  ///< trace of the unnormalized conditioned state
};

/// Analytic S(r)|0> amplitudes on |0>..|dim-1> (not renormalized).
CVector squeezed_vacuum_ket(double r, int dim);

/// S(r)|0><0|S†(r), truncated and renormalized. Throws kTruncationViolation
/// when more than 1e-6 of the population lies at or above `dim`.
DensityMatrix squeezed_vacuum(double r, int dim);

/// (1/cosh r) sum_n tanh(r)^n |n,n>, same truncation rule as squeezed_vacuum.
TwoModeState two_mode_squeezed_vacuum(double r, int dim_a, int dim_b);

DensityMatrix loss_channel(const DensityMatrix& state, double eta);
TwoModeState loss_channel(const TwoModeState& state, double eta, Mode mode);
/// Equal loss on both modes.
TwoModeState loss_channel(const TwoModeState& state, double eta);

/// Effect on the tapped mode that signals a click, I - D†(beta) (1-eta_t)^n D(beta),
/// restricted to |0>..|dim-1>.
CMatrix click_effect(const TapChannel& tap, int dim);

/// Signal-side maps of the tap: click, no click, and outcome ignored (= loss 1-R).
LocalMap tap_click_map(const TapChannel& tap, int dim);
LocalMap tap_no_click_map(const TapChannel& tap, int dim);
LocalMap tap_ignored_map(const TapChannel& tap, int dim);

/// Photon subtraction: conditions the signal on a trigger click. Throws
/// kNoClickSupport when the click probability is below 1e-15.
ConditionalResult<DensityMatrix> tap_and_click(const DensityMatrix& state, const TapChannel& tap);
ConditionalResult<TwoModeState> tap_and_click(const TwoModeState& state, const TapChannel& tap, Mode mode);

/// 50:50 beamsplitter on state (x) |0><0|, evaluated with the exact
/// photon-number-conserving isometry. Output dims are (state.dim(), dim_b);
/// amplitudes that do not fit are dropped and the result renormalized, so
/// dim_b >= state.dim() is lossless.
TwoModeState split_half(const DensityMatrix& state, int dim_b);

/// As above but also cropping mode A to dim_a (for reducing a high-dim source).
TwoModeState split_half(const DensityMatrix& state, int dim_a, int dim_b);

enum class Parties { kNone, kSingle, kDual };

/// Which trigger defines a single-party event.
enum class Trigger { kA, kB, kEither };

/// Distillation scenario on a shared two-mode state.
///
/// For kSingle and kDual both arms carry their tap beamsplitter, as in a
/// setup with one tap and APD per party. A tap whose outcome is not
/// conditioned on acts as pure loss 1 - R. kSingle conditions on a click at
/// `trigger` (A, B, or at least one of the two); kDual requires simultaneous
/// clicks at both. kNone has no taps and succeeds with probability 1.
struct DistillationScenario {
  Parties parties = Parties::kNone;
  TapChannel tap_a{};
  TapChannel tap_b{};
  Trigger trigger = Trigger::kEither;

  static DistillationScenario none();
  static DistillationScenario single(double reflectivity, double trigger_efficiency = 1.0,
                                     Trigger trigger = Trigger::kEither);
  static DistillationScenario dual(double reflectivity, double trigger_efficiency = 1.0);
};

ConditionalResult<TwoModeState> distill(const TwoModeState& state, const DistillationScenario& scenario);

/// Mode rotation (A, B) -> ((A - B)/sqrt 2, (A + B)/sqrt 2): output mode A is
/// the '-' mode, output mode B the '+' mode. Undoes split_half, so a split
/// source lands in '-' with '+' in vacuum.
TwoModeState minus_plus_transform(const TwoModeState& state);

/// Inverse of minus_plus_transform.
TwoModeState minus_plus_inverse(const TwoModeState& state);

}  // namespace photosub
