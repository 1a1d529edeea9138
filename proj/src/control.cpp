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

#include "scrub/control.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "scrub/errors.hpp"
#include "scrub/linfit.hpp"

namespace scrub {

namespace {

constexpr double kPi = std::numbers::pi;

// One offset loop of a polyline; `left` chooses the side relative to the
// travel direction (for a closed loop, callers orient distances so that
// positive = outward).
std::vector<Eigen::Vector2d> offset_loop(
    const std::vector<Eigen::Vector2d>& pts, double distance, bool closed) {
    const std::size_t n = pts.size();
    std::vector<Eigen::Vector2d> out;
    if (distance == 0.0) return pts;

    auto left_normal = [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
        Eigen::Vector2d e = b - a;
        const double len = e.norm();
        if (len < 1e-12) {
            throw DegenerateOffsetError("offset_path: zero-length edge");
        }
        e /= len;
        return Eigen::Vector2d(-e.y(), e.x());
    };

    // Miter joins; bevel fallback when the edges turn back on themselves by
    // more than 165 degrees (miter angle below 15 degrees).
    const double bevel_threshold = 2.0 * std::sin(7.5 * kPi / 180.0);

    for (std::size_t i = 0; i < n; ++i) {
        Eigen::Vector2d n_prev, n_next;
        if (closed) {
            n_prev = left_normal(pts[(i + n - 1) % n], pts[i]);
            n_next = left_normal(pts[i], pts[(i + 1) % n]);
        } else {
            if (i == 0) {
                n_prev = n_next = left_normal(pts[0], pts[1]);
            } else if (i + 1 == n) {
                n_prev = n_next = left_normal(pts[n - 2], pts[n - 1]);
            } else {
                n_prev = left_normal(pts[i - 1], pts[i]);
                n_next = left_normal(pts[i], pts[i + 1]);
            }
        }
        const Eigen::Vector2d m = n_prev + n_next;
        if (m.norm() < bevel_threshold) {
            out.push_back(pts[i] + distance * n_prev);
            out.push_back(pts[i] + distance * n_next);
            continue;
        }
        const Eigen::Vector2d m_hat = m.normalized();
        const double scale = 1.0 / m_hat.dot(n_prev);
        out.push_back(pts[i] + distance * scale * m_hat);
    }

    // A fold-over reverses the travel direction of some offset edge; that
    // happens exactly when the requested offset exceeds the local curvature
    // radius on the concave side.
    const std::size_t nn = out.size();
    const std::size_t limit = closed ? nn : nn - 1;
    for (std::size_t i = 0; i < limit && nn >= 2; ++i) {
        const Eigen::Vector2d e_off = out[(i + 1) % nn] - out[i];
        // Match against the nearest original edge direction.
        const std::size_t j = std::min(i * n / nn, n - (closed ? 1 : 2));
        const Eigen::Vector2d e_orig = pts[(j + 1) % n] - pts[j];
        if (e_off.dot(e_orig) < 0.0) {
            throw DegenerateOffsetError(
                "offset_path: offset exceeds the local curvature radius");
        }
    }
    return out;
}

double polygon_signed_area(const std::vector<Eigen::Vector2d>& pts) {
    double a = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Eigen::Vector2d& p = pts[i];
        const Eigen::Vector2d& q = pts[(i + 1) % pts.size()];
        a += p.x() * q.y() - q.x() * p.y();
    }
    return 0.5 * a;
}

}  // namespace

Planner model_planner(const Model& model) {
    return [model](const Pose& pose, double f_tendon) {
        return predict_tendons(model, pose, f_tendon);
    };
}

Trajectory circle_trajectory(const Pose& center, double diameter,
                             int n_waypoints, double f_normal, double dwell) {
    if (!(diameter > 0.0)) {
        throw std::domain_error("circle_trajectory: diameter must be > 0");
    }
    if (n_waypoints < 3) {
        throw std::domain_error("circle_trajectory: need at least 3 waypoints");
    }
    if (dwell < 0.0) {
        throw std::domain_error("circle_trajectory: dwell must be >= 0");
    }
    Trajectory traj;
    traj.waypoints.reserve(n_waypoints);
    const double r = 0.5 * diameter;
    for (int i = 0; i < n_waypoints; ++i) {
        const double theta = 2.0 * kPi * i / n_waypoints;
        Waypoint wp;
        wp.target.position =
            center.position +
            Eigen::Vector3d(r * std::cos(theta), r * std::sin(theta), 0.0);
        wp.target.orientation = center.orientation;
        wp.target.canonicalize();
        wp.f_normal = f_normal;
        wp.dwell = dwell;
        traj.waypoints.push_back(wp);
    }
    return traj;
}

Trajectory offset_path(const std::vector<Eigen::Vector2d>& centerline,
                       double outer_offset, double inner_offset, double z,
                       double f_normal, double dwell) {
    if (centerline.size() < 3) {
        throw std::domain_error("offset_path: centerline needs >= 3 points");
    }
    if (outer_offset < 0.0 || inner_offset < 0.0) {
        throw std::domain_error("offset_path: offsets must be >= 0");
    }

    // Closed when the endpoints coincide; drop the duplicate vertex.
    std::vector<Eigen::Vector2d> pts = centerline;
    bool closed = false;
    if ((pts.front() - pts.back()).norm() < 1e-9) {
        pts.pop_back();
        closed = true;
        if (pts.size() < 3) {
            throw std::domain_error("offset_path: degenerate closed loop");
        }
    }

    // Outward = away from the interior for a closed loop (sign from the
    // winding direction); left of travel for an open chain.
    double outward_sign = 1.0;
    if (closed && polygon_signed_area(pts) > 0.0) {
        outward_sign = -1.0;  // counterclockwise: interior is to the left
    }

    const auto outer = offset_loop(pts, outward_sign * outer_offset, closed);
    const auto inner = offset_loop(pts, -outward_sign * inner_offset, closed);

    Trajectory traj;
    auto append = [&](const std::vector<Eigen::Vector2d>& loop) {
        for (const Eigen::Vector2d& p : loop) {
            Waypoint wp;
            wp.target.position = Eigen::Vector3d(p.x(), p.y(), z);
            wp.f_normal = f_normal;
            wp.dwell = dwell;
            traj.waypoints.push_back(wp);
        }
    };
    append(outer);
    append(inner);
    return traj;
}

TendonConfig plan_waypoint(const Pose& pose, double f_normal, double f_gravity,
                           const Planner& planner,
                           const OperatingRange& range) {
    const double f_t = tendon_tension(f_gravity, f_normal);
    const DistributionCheck check = check_in_distribution(f_t, range);
    if (!check.in_distribution) {
        throw InfeasibleLoadError("plan_waypoint: " + check.note);
    }
    return planner(pose, f_t);
}

double orientation_error_deg(const Eigen::Quaterniond& a,
                             const Eigen::Quaterniond& b) {
    const double dot = std::abs(a.normalized().dot(b.normalized()));
    return 2.0 * std::acos(std::min(1.0, dot)) * 180.0 / kPi;
}

TrackingReport track_and_evaluate(const Trajectory& traj,
                                  const Planner& planner,
                                  const PlantConfig& plant,
                                  double f_gravity_belief, double extra_load,
                                  std::uint64_t noise_seed) {
    if (traj.waypoints.empty()) {
        throw std::domain_error("track_and_evaluate: empty trajectory");
    }
    const double f_gravity_true = f_gravity_belief + extra_load;

    TrackingReport report;
    report.series.reserve(traj.waypoints.size());
    double sum_mm = 0.0;
    double sum_deg = 0.0;
    for (std::size_t i = 0; i < traj.waypoints.size(); ++i) {
        const Waypoint& wp = traj.waypoints[i];
        const TendonConfig q =
            plan_waypoint(wp.target, wp.f_normal, f_gravity_belief, planner);
        const double tension_true =
            tendon_tension(f_gravity_true, wp.f_normal);
        const Pose reached =
            forward_pose(q, tension_true, plant, noise_seed + i);

        TrackingRecord rec;
        rec.target = wp.target;
        rec.reached = reached;
        rec.err_mm = (reached.position - wp.target.position).norm();
        rec.err_deg =
            orientation_error_deg(reached.orientation, wp.target.orientation);
        sum_mm += rec.err_mm;
        sum_deg += rec.err_deg;
        report.max_err_mm = std::max(report.max_err_mm, rec.err_mm);
        report.max_err_deg = std::max(report.max_err_deg, rec.err_deg);
        report.series.push_back(rec);
    }
    const double n = static_cast<double>(report.series.size());
    report.mean_err_mm = sum_mm / n;
    report.mean_err_deg = sum_deg / n;
    report.mean_err_pct_length =
        100.0 * report.mean_err_mm / plant.nominal_length;
    report.max_err_pct_length =
        100.0 * report.max_err_mm / plant.nominal_length;
    return report;
}

ForceRampReport force_ramp_eval(const Planner& planner,
                                const PlantConfig& plant,
                                const ForceRampConfig& cfg) {
    if (cfg.steps < 2) {
        throw std::domain_error("force_ramp_eval: need at least 2 ramp steps");
    }
    ForceRampReport report;
    report.surface_z = cfg.surface_z;
    for (double dr : cfg.delta_r) {
        ForceRampSweep sweep;
        sweep.delta_r = dr;
        for (int i = 0; i < cfg.steps; ++i) {
            const double target =
                cfg.f_start +
                (cfg.f_end - cfg.f_start) * i / (cfg.steps - 1);
            Pose pose;
            // Press into the compliant surface by the spring deflection the
            // target force will produce.
            pose.position = Eigen::Vector3d(
                dr, 0.0, cfg.surface_z - target / plant.contact_stiffness);
            const TendonConfig q =
                plan_waypoint(pose, target, cfg.f_gravity, planner);
            const double measured =
                contact_force(q, cfg.f_gravity, cfg.surface_z, plant);
            sweep.targets.push_back(target);
            sweep.measured.push_back(measured);
        }
        const LinearFit fit = fit_linear(sweep.targets, sweep.measured);
        sweep.gain = fit.slope;
        sweep.offset = fit.intercept;
        sweep.r_squared = fit.r_squared;
        sweep.gain_error_percent = (fit.slope - 1.0) * 100.0;
        report.sweeps.push_back(std::move(sweep));
    }
    return report;
}

std::vector<HardwareReferenceFit> hardware_reference_fits() {
    return {{0.0, 0.923, 35.7, 0.23},
            {25.0, 0.965, 35.0, -0.44},
            {50.0, 0.926, 21.4, 0.90},
            {75.0, 0.995, 8.85, 0.17}};
}

}  // namespace scrub
