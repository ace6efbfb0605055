/*
 * Copyright (C) 2026 uNet Scheduling Contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
*/

#ifndef UNET_SEPARATION_HPP
#define UNET_SEPARATION_HPP

#include <cmath>
#include <numbers>

#include "unet/error.hpp"

namespace unet {

/// Along-route spacing needed so two vehicles at the same speed stay at
/// least d_sep apart through any turn of angle up to max_turn_angle.
/// Diverges as the turn angle approaches a U-turn (pi).
inline double min_turn_spacing(double d_sep, double max_turn_angle) {
  if (!(max_turn_angle >= 0.0) || max_turn_angle >= std::numbers::pi)
    throw Error(ErrorCode::invalid_argument, "max turn angle must be in [0, pi)");
  if (!(d_sep > 0.0)) throw Error(ErrorCode::invalid_argument, "d_sep must be positive");
  return d_sep / std::cos(max_turn_angle / 2.0);
}

/// Arrival-time spacing equivalent of an along-route spacing at speed v.
inline double min_time_spacing(double d_min, double speed) {
  if (!(speed > 0.0)) throw Error(ErrorCode::invalid_argument, "speed must be positive");
  if (d_min < 0.0) throw Error(ErrorCode::invalid_argument, "d_min must be non-negative");
  return d_min / speed;
}

/// Closed-form lower bound on the distance between a vehicle holding a
/// boundary-circle column and one crossing the same level toward the node
/// center, given the chord between their circle points. Valid for chords up
/// to sqrt(2) * d_star; used to cross-check the sampled-trajectory oracle.
inline double lower_bound_distance(double d_star, double chord) {
  if (!(d_star > 0.0)) throw Error(ErrorCode::invalid_argument, "d_star must be positive");
  if (!(chord >= 0.0) || chord > std::numbers::sqrt2 * d_star + 1e-9)
    throw Error(ErrorCode::invalid_argument, "chord must lie in [0, sqrt(2)*d_star]");
  return chord / std::numbers::sqrt2;
}

/// Separation parameters shared by geometry construction and scheduling.
///
/// d_min and t_min are derived: d_min = d_sep / cos(phi_star/2),
/// t_min = d_min / speed.
struct SeparationParams {
  double d_sep = 6.0;                        // meters
  double phi_star = 5.0 * std::numbers::pi / 6.0;  // radians, max turn angle
  double speed = 4.0;                        // meters/second

  void validate() const {
    if (!(d_sep > 0.0)) throw Error(ErrorCode::invalid_argument, "d_sep must be positive");
    if (!(phi_star >= 0.0) || phi_star >= std::numbers::pi)
      throw Error(ErrorCode::invalid_argument, "phi_star must be in [0, pi)");
    if (!(speed > 0.0)) throw Error(ErrorCode::invalid_argument, "speed must be positive");
  }

  double d_min() const { return min_turn_spacing(d_sep, phi_star); }
  double t_min() const { return min_time_spacing(d_min(), speed); }
};

}  // namespace unet

#endif  // UNET_SEPARATION_HPP
