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

#include "scrub/plant.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "scrub/errors.hpp"

namespace scrub {

TendonConfig TendonConfig::from_arcs(const std::array<ArcParams, 3>& arcs,
                                     double tendon_radius) {
    TendonConfig q;
    for (int s = 0; s < 3; ++s) {
        q.set_stage(s, arc_to_tendons(arcs[s], tendon_radius));
    }
    return q;
}

void PlantConfig::validate() const {
    if (!(tendon_radius > 0.0) || !(nominal_length > 0.0) ||
        !(c_axial > 0.0) || !(c_lateral > 0.0) || !(contact_stiffness > 0.0) ||
        !(reference_tension > 0.0)) {
        throw std::domain_error("PlantConfig: all parameters must be > 0");
    }
    if (noise_sigma < 0.0) {
        throw std::domain_error("PlantConfig: noise_sigma must be >= 0");
    }
}

PlantConfig load_plant_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("plant config: cannot open " + path);
    PlantConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError("plant config: missing '=' on line " +
                             std::to_string(lineno));
        }
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        auto strip = [](std::string& s) {
            const auto a = s.find_first_not_of(" \t");
            const auto b = s.find_last_not_of(" \t");
            s = (a == std::string::npos) ? "" : s.substr(a, b - a + 1);
        };
        strip(key);
        strip(value);
        double num = 0.0;
        try {
            std::size_t used = 0;
            num = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw ParseError("plant config: bad number '" + value +
                             "' on line " + std::to_string(lineno));
        }
        if (key == "tendon_radius") cfg.tendon_radius = num;
        else if (key == "nominal_length") cfg.nominal_length = num;
        else if (key == "c_axial") cfg.c_axial = num;
        else if (key == "c_lateral") cfg.c_lateral = num;
        else if (key == "contact_stiffness") cfg.contact_stiffness = num;
        else if (key == "reference_tension") cfg.reference_tension = num;
        else if (key == "noise_sigma") cfg.noise_sigma = num;
        else {
            throw ParseError("plant config: unknown key '" + key +
                             "' on line " + std::to_string(lineno));
        }
    }
    cfg.validate();
    return cfg;
}

void save_plant_config(const PlantConfig& cfg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("plant config: cannot write " + path);
    out << "# synthetic plant parameters (mm, N)\n";
    out << "tendon_radius = " << cfg.tendon_radius << "\n";
    out << "nominal_length = " << cfg.nominal_length << "\n";
    out << "c_axial = " << cfg.c_axial << "\n";
    out << "c_lateral = " << cfg.c_lateral << "\n";
    out << "contact_stiffness = " << cfg.contact_stiffness << "\n";
    out << "reference_tension = " << cfg.reference_tension << "\n";
    out << "noise_sigma = " << cfg.noise_sigma << "\n";
}

void validate_on_manifold(const TendonConfig& q, const PlantConfig& cfg) {
    for (int s = 0; s < 3; ++s) {
        const Eigen::Vector3d l = q.stage(s);
        if (!(l[0] > 0.0 && l[1] > 0.0 && l[2] > 0.0)) {
            throw ManifoldError("tendon configuration: non-positive length in stage " +
                                std::to_string(s + 1));
        }
        const ArcParams arc = tendons_to_arc(l[0], l[1], l[2], cfg.tendon_radius);
        if (arc.kappa * arc.ell >= std::numbers::pi) {
            throw ManifoldError("tendon configuration: stage " +
                                std::to_string(s + 1) +
                                " bends beyond the half turn envelope");
        }
    }
}

Pose rigid_tip_pose(const TendonConfig& q, const PlantConfig& cfg) {
    validate_on_manifold(q, cfg);
    Eigen::Vector3d p = Eigen::Vector3d::Zero();
    Eigen::Quaterniond r = Eigen::Quaterniond::Identity();
    for (int s = 0; s < 3; ++s) {
        const Eigen::Vector3d l = q.stage(s);
        const ArcParams arc = tendons_to_arc(l[0], l[1], l[2], cfg.tendon_radius);
        Eigen::Vector3d t;
        Eigen::Quaterniond dr;
        arc_transform(arc, t, dr);
        p += r * t;
        r = r * dr;
    }
    Pose pose;
    pose.position = p;
    pose.orientation = r;
    pose.canonicalize();
    return pose;
}

Pose forward_pose(const TendonConfig& q, double f_tendon,
                  const PlantConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    Pose pose = rigid_tip_pose(q, cfg);

    // Elastic deflection, linear in the tension carried above the reference:
    // the tip sags along -z and is drawn radially inward in proportion to
    // its horizontal offset fraction.
    const double excess = f_tendon - cfg.reference_tension;
    const double lateral_scale = 1.0 - cfg.c_lateral * excess / cfg.nominal_length;
    pose.position.x() *= lateral_scale;
    pose.position.y() *= lateral_scale;
    pose.position.z() -= cfg.c_axial * excess;

    if (cfg.noise_sigma > 0.0) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> noise(0.0, cfg.noise_sigma);
        pose.position.x() += noise(rng);
        pose.position.y() += noise(rng);
        pose.position.z() += noise(rng);
    }
    return pose;
}

double contact_force(const TendonConfig& q, double f_gravity, double surface_z,
                     const PlantConfig& cfg) {
    cfg.validate();
    const double cap = f_gravity - cfg.reference_tension;
    if (cap <= 0.0) return 0.0;

    const auto residual = [&](double f) {
        const double z = forward_pose(q, f_gravity - f, cfg).position.z();
        const double penetration = surface_z - z;
        return cfg.contact_stiffness * std::max(0.0, penetration) - f;
    };

    constexpr double kTol = 1e-6;  // N
    double lo = 0.0;
    double hi = cap;
    double r_lo = residual(lo);
    if (r_lo <= 0.0) return 0.0;  // tip clears the surface unloaded
    if (residual(hi) > 0.0) return cap;  // saturated against the bracket top

    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double r = residual(mid);
        if (std::abs(r) < kTol) return mid;
        if (r > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    throw NumericError("contact_force: bisection failed to converge");
}

}  // namespace scrub
