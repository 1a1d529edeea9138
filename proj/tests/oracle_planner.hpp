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

#include <cmath>

#include "scrub/control.hpp"
#include "scrub/plant.hpp"

// Test-only closed-form inverse for the equal-curvature three-segment
// family: given a target tip position and the tension it will be executed
// at, undo the elastic deflection analytically and solve the single-arc
// geometry for (kappa, phi, ell). Orientation is whatever the arc family
// yields, so this planner is exact in position only. It never calls the
// forward kinematics; everything here is independent algebra.

namespace scrub_test {

inline scrub::Planner exact_position_planner(const scrub::PlantConfig& cfg) {
    return [cfg](const scrub::Pose& target, double f_tendon) {
        const double excess = f_tendon - cfg.reference_tension;
        const double scale =
            1.0 - cfg.c_lateral * excess / cfg.nominal_length;

        // Rigid-kinematics goal before the deflection is applied.
        const double x = target.position.x() / scale;
        const double y = target.position.y() / scale;
        const double z = target.position.z() + cfg.c_axial * excess;
        const double rho = std::hypot(x, y);

        scrub::ArcParams arc;
        if (rho < 1e-12) {
            arc.kappa = 0.0;
            arc.phi = 0.0;
            arc.ell = -z / 3.0;
        } else {
            const double u = 2.0 * std::atan2(rho, -z);  // total bend angle
            arc.kappa = std::sin(u) / (-z);
            arc.phi = std::atan2(y, x);
            arc.ell = u / arc.kappa / 3.0;
        }
        return scrub::TendonConfig::from_arcs({arc, arc, arc},
                                              cfg.tendon_radius);
    };
}

}  // namespace scrub_test
