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
#include <array>
#include <cstdint>
#include <string>

#include "scrub/arc.hpp"
#include "scrub/pose.hpp"

// Synthetic ground-truth arm. Three stacked constant-curvature segments are
// driven by nine tendon lengths (three per stage). On top of the rigid
// kinematics the tip deflects elastically with the carried tendon tension:
// it sags along -z by c_axial per newton above the reference tension and is
// pulled radially inward in proportion to its horizontal offset. A planar
// surface below the tip acts as a linear spring for contact experiments.

namespace scrub {

/// Nine tendon lengths in mm, ordered stage by stage (base to tip), three
/// circumferential slots per stage.
struct TendonConfig {
    Eigen::Matrix<double, 9, 1> lengths = Eigen::Matrix<double, 9, 1>::Zero();

    Eigen::Vector3d stage(int s) const { return lengths.segment<3>(3 * s); }
    void set_stage(int s, const Eigen::Vector3d& l) {
        lengths.segment<3>(3 * s) = l;
    }

    static TendonConfig from_arcs(const std::array<ArcParams, 3>& arcs,
                                  double tendon_radius);
};

struct PlantConfig {
    double tendon_radius = 40.0;     // mm, attachment circle
    double nominal_length = 710.0;   // mm, total arm length
    double c_axial = 3.0;            // mm/N, sag per newton of tension
    double c_lateral = 10.0;         // mm/N per unit radial offset fraction
    double contact_stiffness = 5.0;  // N/mm
    double reference_tension = 6.2;  // N, zero-deflection tension
    double noise_sigma = 0.0;        // mm, optional position noise

    void validate() const;
};

/// Parses a flat key=value file ('#' starts a comment). Unknown keys and
/// malformed lines raise ParseError with the line number.
PlantConfig load_plant_config(const std::string& path);
void save_plant_config(const PlantConfig& cfg, const std::string& path);

/// Checks that the configuration is physically meaningful: positive lengths
/// and per-stage bend angle below pi. Throws ManifoldError otherwise.
void validate_on_manifold(const TendonConfig& q, const PlantConfig& cfg);

/// Tip pose from the rigid constant-curvature kinematics alone.
Pose rigid_tip_pose(const TendonConfig& q, const PlantConfig& cfg);

/// Tip pose including the elastic deflection at the given tendon tension.
/// Deterministic; `seed` only matters when cfg.noise_sigma > 0, in which
/// case seeded Gaussian noise is added to the position.
Pose forward_pose(const TendonConfig& q, double f_tendon,
                  const PlantConfig& cfg, std::uint64_t seed = 0);

/// Contact force against a horizontal plane at surface_z acting as a linear
/// spring: solves F = k * max(0, surface_z - z_tip(q, f_gravity - F)) by
/// bisection over F in [0, f_gravity - reference_tension] to 1e-6 N. The
/// penetration shrinks as the contact force unloads the arm, so the
/// residual is strictly decreasing and the root unique. Saturates at the
/// bracket top when even maximal unloading leaves the tip penetrating.
double contact_force(const TendonConfig& q, double f_gravity, double surface_z,
                     const PlantConfig& cfg);

}  // namespace scrub
