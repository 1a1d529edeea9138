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
#include <functional>
#include <vector>

#include "scrub/mlp.hpp"
#include "scrub/plant.hpp"
#include "scrub/pose.hpp"
#include "scrub/statics.hpp"

// Open-loop position and force control on the learned inverse model, plus
// the evaluation loops that grade it against the plant: circle tracking
// under an extra tip load and linear force ramps over a radial sweep.

namespace scrub {

struct Waypoint {
    Pose target;
    double f_normal = 0.0;  // N
    double dwell = 0.0;     // s; metadata only, the simulation has no clock
};

struct Trajectory {
    std::vector<Waypoint> waypoints;
};

/// Anything that maps (target pose, tendon tension) to motor inputs.
using Planner = std::function<TendonConfig(const Pose&, double f_tendon)>;

/// Planner backed by the trained inverse model.
Planner model_planner(const Model& model);

/// n equally spaced waypoints on a horizontal circle, tool-down
/// orientation, traversed as a closed loop (the last waypoint neighbors
/// the first).
Trajectory circle_trajectory(const Pose& center, double diameter,
                             int n_waypoints, double f_normal, double dwell);

/// Two coverage loops around a planar centerline polyline: one offset
/// outward (to the left of travel for an open chain) and one inward,
/// concatenated. Vertices use miter joins; miters sharper than 15 degrees
/// fall back to bevels. Throws DegenerateOffsetError when an inward offset
/// exceeds the local curvature radius and the loop folds over itself.
Trajectory offset_path(const std::vector<Eigen::Vector2d>& centerline,
                       double outer_offset, double inner_offset, double z,
                       double f_normal = 0.0, double dwell = 0.0);

/// Tension for the commanded load, validated against the trained band,
/// then one inference pass. Throws InfeasibleLoadError when the load is
/// infeasible or out of distribution.
TendonConfig plan_waypoint(const Pose& pose, double f_normal, double f_gravity,
                           const Planner& planner,
                           const OperatingRange& range = {});

/// Geodesic angle between two rotations in degrees; insensitive to the
/// quaternion double cover.
double orientation_error_deg(const Eigen::Quaterniond& a,
                             const Eigen::Quaterniond& b);

struct TrackingRecord {
    Pose target;
    Pose reached;
    double err_mm = 0.0;
    double err_deg = 0.0;
};

struct TrackingReport {
    double mean_err_mm = 0.0;
    double max_err_mm = 0.0;
    double mean_err_pct_length = 0.0;  // relative to the arm length
    double max_err_pct_length = 0.0;
    double mean_err_deg = 0.0;
    double max_err_deg = 0.0;
    std::vector<TrackingRecord> series;
};

/// Plans every waypoint with the weight the controller believes in, then
/// executes on the plant carrying belief + extra_load. The gap between the
/// two is what a load-aware model is supposed to absorb. noise_seed feeds
/// the plant's optional measurement noise per waypoint.
TrackingReport track_and_evaluate(const Trajectory& traj,
                                  const Planner& planner,
                                  const PlantConfig& plant,
                                  double f_gravity_belief, double extra_load,
                                  std::uint64_t noise_seed = 0);

struct ForceRampSweep {
    double delta_r = 0.0;            // mm, radial offset of the press point
    double gain = 0.0;               // K in measured = K*target + b
    double offset = 0.0;             // b
    double r_squared = 0.0;
    double gain_error_percent = 0.0; // (K-1)*100
    std::vector<double> targets;     // N
    std::vector<double> measured;    // N
};

struct ForceRampReport {
    std::vector<ForceRampSweep> sweeps;
    double surface_z = 0.0;
};

struct ForceRampConfig {
    double f_gravity = 15.3;                       // N
    double f_start = 1.0;                          // N, ensures contact
    double f_end = 8.5;                            // N
    int steps = 16;
    std::vector<double> delta_r = {0.0, 25.0, 50.0, 75.0};  // mm
    double surface_z = -695.0;                     // mm
};

/// Commands a linear contact-force ramp at each radial offset and fits
/// measured vs. target. Targets are commanded by pressing the tool
/// F/k_c into the surface plane so an exact model yields K = 1, b = 0.
ForceRampReport force_ramp_eval(const Planner& planner,
                                const PlantConfig& plant,
                                const ForceRampConfig& cfg = {});

struct HardwareReferenceFit {
    double delta_r;
    double r_squared;
    double gain_error_percent;
    double offset;
};

/// Force-ramp fits measured on the physical system, kept as reference
/// output next to simulation results; they are not reproduction targets.
std::vector<HardwareReferenceFit> hardware_reference_fits();

}  // namespace scrub
