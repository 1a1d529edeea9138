// Copyright 2026 The scrub Authors
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

#include <Eigen/Dense>

// Constant-curvature segment parameterization. A segment of arc length ell
// bends with curvature kappa toward the in-plane direction phi (measured
// from tendon slot 1); the three tendons of a stage sit on a circle of
// radius d at azimuths 0, 120 and 240 degrees, and the tendon on the inside
// of the bend is the shortest.

namespace scrub {

/// Curvature below this is treated as an exactly straight segment.
inline constexpr double kStraightKappa = 1e-9;  // 1/mm

struct ArcParams {
    double kappa = 0.0;  // 1/mm, >= 0
    double phi = 0.0;    // rad, bend direction
    double ell = 0.0;    // mm, arc length
};

/// Recovers arc parameters from one stage's tendon lengths. phi is defined
/// as 0 for a straight segment. Throws std::domain_error on non-positive
/// lengths.
ArcParams tendons_to_arc(double l1, double l2, double l3, double d);

/// Tendon lengths l_i = ell * (1 - kappa * d * cos(phi - theta_i)) for the
/// three slots. Throws EnvelopeError when a length would be non-positive.
Eigen::Vector3d arc_to_tendons(const ArcParams& arc, double d);

/// Rigid-body transform across one segment in a frame whose segment axis
/// points along -z: returns the tip translation and rotation.
void arc_transform(const ArcParams& arc, Eigen::Vector3d& translation,
                   Eigen::Quaterniond& rotation);

}  // namespace scrub
