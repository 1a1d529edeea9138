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

#include "scrub/arc.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "scrub/errors.hpp"

namespace scrub {

ArcParams tendons_to_arc(double l1, double l2, double l3, double d) {
    if (!(l1 > 0.0 && l2 > 0.0 && l3 > 0.0)) {
        throw std::domain_error("tendons_to_arc: lengths must be > 0");
    }
    if (!(d > 0.0)) {
        throw std::domain_error("tendons_to_arc: attachment radius must be > 0");
    }
    ArcParams arc;
    const double sum = l1 + l2 + l3;
    arc.ell = sum / 3.0;
    const double disc =
        l1 * l1 + l2 * l2 + l3 * l3 - l1 * l2 - l2 * l3 - l3 * l1;
    arc.kappa = 2.0 * std::sqrt(std::max(0.0, disc)) / (d * sum);
    arc.phi = (arc.kappa < kStraightKappa)
                  ? 0.0
                  : std::atan2(std::sqrt(3.0) * (l3 - l2), l2 + l3 - 2.0 * l1);
    return arc;
}

Eigen::Vector3d arc_to_tendons(const ArcParams& arc, double d) {
    if (!(arc.ell > 0.0) || arc.kappa < 0.0) {
        throw std::domain_error("arc_to_tendons: invalid arc parameters");
    }
    constexpr double theta[3] = {0.0, 2.0 * std::numbers::pi / 3.0,
                                 4.0 * std::numbers::pi / 3.0};
    Eigen::Vector3d lengths;
    for (int i = 0; i < 3; ++i) {
        lengths[i] =
            arc.ell * (1.0 - arc.kappa * d * std::cos(arc.phi - theta[i]));
        if (!(lengths[i] > 0.0)) {
            throw EnvelopeError("arc_to_tendons: tendon length out of envelope");
        }
    }
    return lengths;
}

void arc_transform(const ArcParams& arc, Eigen::Vector3d& translation,
                   Eigen::Quaterniond& rotation) {
    if (arc.kappa < kStraightKappa) {
        translation = Eigen::Vector3d(0.0, 0.0, -arc.ell);
        rotation = Eigen::Quaterniond::Identity();
        return;
    }
    const double u = arc.kappa * arc.ell;  // total bend angle
    const double c = std::cos(arc.phi);
    const double s = std::sin(arc.phi);
    // Axis perpendicular to the bend plane, oriented so the tip moves toward
    // (cos phi, sin phi, 0) for small bends.
    const Eigen::Vector3d axis(s, -c, 0.0);
    rotation = Eigen::Quaterniond(Eigen::AngleAxisd(u, axis));
    translation = (std::sin(u) / arc.kappa) * Eigen::Vector3d(0.0, 0.0, -1.0) +
                  ((1.0 - std::cos(u)) / arc.kappa) * Eigen::Vector3d(c, s, 0.0);
}

}  // namespace scrub
