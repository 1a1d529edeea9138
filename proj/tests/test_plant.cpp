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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "scrub/arc.hpp"
#include "scrub/errors.hpp"
#include "scrub/plant.hpp"

using namespace scrub;

namespace {

TendonConfig bent_config(const PlantConfig& cfg) {
    return TendonConfig::from_arcs(
        {ArcParams{0.0020, 0.7, 236.0}, ArcParams{0.0010, 2.0, 236.0},
         ArcParams{0.0015, 4.0, 238.0}},
        cfg.tendon_radius);
}

TendonConfig straight_config(double per_stage = 710.0 / 3.0) {
    TendonConfig q;
    q.lengths.setConstant(per_stage);
    return q;
}

}  // namespace

TEST_CASE("tendon triple to arc parameters") {
    const ArcParams arc = tendons_to_arc(200.0, 200.0, 200.0, 40.0);
    CHECK(arc.kappa == 0.0);
    CHECK(arc.phi == 0.0);
    CHECK(arc.ell == doctest::Approx(200.0).epsilon(1e-12));

    CHECK_THROWS_AS(tendons_to_arc(0.0, 200.0, 200.0, 40.0), std::domain_error);
    CHECK_THROWS_AS(tendons_to_arc(200.0, -1.0, 200.0, 40.0), std::domain_error);
}

TEST_CASE("arc parameters to tendon triple") {
    const Eigen::Vector3d straight =
        arc_to_tendons(ArcParams{0.0, 1.234, 200.0}, 40.0);
    CHECK(straight[0] == doctest::Approx(200.0));
    CHECK(straight[1] == doctest::Approx(200.0));
    CHECK(straight[2] == doctest::Approx(200.0));

    // Hand evaluation: kappa*d = 0.08, cos(-2pi/3) = -1/2.
    const Eigen::Vector3d bent =
        arc_to_tendons(ArcParams{0.002, 0.0, 200.0}, 40.0);
    CHECK(bent[0] == doctest::Approx(184.0).epsilon(1e-12));
    CHECK(bent[1] == doctest::Approx(208.0).epsilon(1e-12));
    CHECK(bent[2] == doctest::Approx(208.0).epsilon(1e-12));

    // Tendon lengths always average to the arc length.
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const ArcParams arc{0.004 * u(rng), 2.0 * std::numbers::pi * u(rng),
                            150.0 + 150.0 * u(rng)};
        const Eigen::Vector3d l = arc_to_tendons(arc, 40.0);
        CHECK(l.mean() == doctest::Approx(arc.ell).epsilon(1e-12));
    }

    // kappa*d >= 1 drives a tendon length non-positive.
    CHECK_THROWS_AS(arc_to_tendons(ArcParams{0.03, 0.0, 200.0}, 40.0),
                    EnvelopeError);
}

TEST_CASE("arc round-trips") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        const ArcParams arc{1e-5 + 0.004 * u(rng),
                            2.0 * std::numbers::pi * u(rng) - std::numbers::pi,
                            150.0 + 150.0 * u(rng)};
        const Eigen::Vector3d l = arc_to_tendons(arc, 40.0);
        const ArcParams back = tendons_to_arc(l[0], l[1], l[2], 40.0);
        CHECK(back.kappa == doctest::Approx(arc.kappa).epsilon(1e-9));
        CHECK(back.ell == doctest::Approx(arc.ell).epsilon(1e-9));
        const double dphi =
            std::remainder(back.phi - arc.phi, 2.0 * std::numbers::pi);
        CHECK(std::abs(dphi) < 1e-9);
    }

    // Any positive triple decomposes exactly (mean plus one harmonic), so
    // tendon -> arc -> tendon is also the identity.
    for (int i = 0; i < 300; ++i) {
        const double m = 150.0 + 150.0 * u(rng);
        Eigen::Vector3d l(m * (1.0 + 0.2 * (u(rng) - 0.5)),
                          m * (1.0 + 0.2 * (u(rng) - 0.5)),
                          m * (1.0 + 0.2 * (u(rng) - 0.5)));
        const ArcParams arc = tendons_to_arc(l[0], l[1], l[2], 40.0);
        const Eigen::Vector3d back = arc_to_tendons(arc, 40.0);
        CHECK((back - l).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("shortening tendon 1 bends toward tendon 1") {
    const PlantConfig cfg;
    // The recovered bend direction is phi = 0 (tendon 1 azimuth), and the
    // tip indeed moves toward +x in the forward model.
    const ArcParams arc = tendons_to_arc(236.0 - 0.5, 236.0, 236.0, 40.0);
    CHECK(arc.kappa > 0.0);
    CHECK(arc.phi == doctest::Approx(0.0).epsilon(1e-12));

    TendonConfig q = straight_config(236.0);
    q.lengths[0] -= 0.5;
    const Pose tip = forward_pose(q, cfg.reference_tension, cfg);
    CHECK(tip.position.x() > 0.1);
    CHECK(std::abs(tip.position.y()) < 1e-9);
}

TEST_CASE("straight configuration hangs straight down") {
    const PlantConfig cfg;
    const TendonConfig q = straight_config();
    const Pose pose = forward_pose(q, cfg.reference_tension, cfg);
    CHECK(pose.position.x() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(pose.position.y() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(pose.position.z() == doctest::Approx(-710.0).epsilon(1e-12));
    CHECK(pose.orientation.w() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(pose.orientation.vec().norm()) < 1e-12);
}

TEST_CASE("tip sags with carried tension") {
    const PlantConfig cfg;
    const TendonConfig q = bent_config(cfg);
    const Pose light = forward_pose(q, 6.2, cfg);
    const Pose heavy = forward_pose(q, 15.3, cfg);
    CHECK(heavy.position.z() < light.position.z());
    // Heavier tension also pulls the tip radially inward.
    CHECK(heavy.position.head<2>().norm() < light.position.head<2>().norm());
}

TEST_CASE("deflection components match the closed form") {
    const PlantConfig cfg;
    const TendonConfig q = bent_config(cfg);
    const Pose rigid = rigid_tip_pose(q, cfg);
    const double excess = 9.1;
    const Pose loaded = forward_pose(q, cfg.reference_tension + excess, cfg);

    const double dz = rigid.position.z() - loaded.position.z();
    CHECK(dz == doctest::Approx(cfg.c_axial * excess).epsilon(1e-12));

    const double rho = rigid.position.head<2>().norm();
    const double inward = rho - loaded.position.head<2>().norm();
    CHECK(inward ==
          doctest::Approx(cfg.c_lateral * excess * rho / cfg.nominal_length)
              .epsilon(1e-12));
    // Orientation is untouched by the deflection.
    CHECK(loaded.orientation.angularDistance(rigid.orientation) < 1e-12);
}

TEST_CASE("slot rotation rotates the tip by 120 degrees") {
    const PlantConfig cfg;
    const TendonConfig q = bent_config(cfg);
    TendonConfig rotated;
    for (int s = 0; s < 3; ++s) {
        const Eigen::Vector3d l = q.stage(s);
        rotated.set_stage(s, Eigen::Vector3d(l[2], l[0], l[1]));
    }
    const Pose a = forward_pose(q, 8.0, cfg);
    const Pose b = forward_pose(rotated, 8.0, cfg);
    const Eigen::AngleAxisd rot(2.0 * std::numbers::pi / 3.0,
                                Eigen::Vector3d::UnitZ());
    CHECK((b.position - rot * a.position).norm() < 1e-9);
}

TEST_CASE("orientation output is unit and canonical") {
    const PlantConfig cfg;
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const TendonConfig q = TendonConfig::from_arcs(
            {ArcParams{0.004 * u(rng), 6.28 * u(rng), 200.0 + 70.0 * u(rng)},
             ArcParams{0.004 * u(rng), 6.28 * u(rng), 200.0 + 70.0 * u(rng)},
             ArcParams{0.004 * u(rng), 6.28 * u(rng), 200.0 + 70.0 * u(rng)}},
            cfg.tendon_radius);
        const Pose pose = forward_pose(q, 6.2 + 9.1 * u(rng), cfg);
        CHECK(std::abs(pose.orientation.norm() - 1.0) < 1e-9);
        CHECK(pose.orientation.w() >= 0.0);
    }
}

TEST_CASE("forward pose is deterministic including seeded noise") {
    PlantConfig cfg;
    cfg.noise_sigma = 2.0;
    const TendonConfig q = bent_config(cfg);
    const Pose a = forward_pose(q, 9.0, cfg, 42);
    const Pose b = forward_pose(q, 9.0, cfg, 42);
    CHECK(a.position == b.position);
    const Pose c = forward_pose(q, 9.0, cfg, 43);
    CHECK((a.position - c.position).norm() > 1e-6);
}

TEST_CASE("off-manifold configurations are rejected") {
    const PlantConfig cfg;
    TendonConfig q = straight_config();
    q.lengths[4] = -3.0;
    CHECK_THROWS_AS(forward_pose(q, 8.0, cfg), ManifoldError);

    // A stage bent past half a turn is outside the envelope.
    const TendonConfig hairpin = TendonConfig::from_arcs(
        {ArcParams{0.02, 0.0, 236.0}, ArcParams{0.0, 0.0, 236.0},
         ArcParams{0.0, 0.0, 236.0}},
        cfg.tendon_radius);
    CHECK_THROWS_AS(forward_pose(hairpin, 8.0, cfg), ManifoldError);
}

TEST_CASE("contact force against a plane") {
    const PlantConfig cfg;
    const TendonConfig q = straight_config();  // rigid tip at z = -710
    const double f_g = 15.3;

    SUBCASE("no contact when the surface is far below") {
        CHECK(contact_force(q, f_g, -5000.0, cfg) == 0.0);
    }

    SUBCASE("solved force zeroes the spring residual") {
        const double surface_z = -730.0;
        const double f = contact_force(q, f_g, surface_z, cfg);
        CHECK(f > 0.0);
        const double z = forward_pose(q, f_g - f, cfg).position.z();
        const double residual =
            cfg.contact_stiffness * std::max(0.0, surface_z - z) - f;
        CHECK(std::abs(residual) < 1e-6);
        // Closed form for the straight arm: z(F) = -737.3 + 3F.
        CHECK(f == doctest::Approx(36.5 / 16.0).epsilon(1e-6));
    }

    SUBCASE("grid scan oracle") {
        const double surface_z = -731.5;
        const double f = contact_force(q, f_g, surface_z, cfg);
        // Brute force: walk the bracket at 1e-4 N resolution and find the
        // residual sign change.
        double best = 0.0;
        double prev = cfg.contact_stiffness *
                          std::max(0.0, surface_z -
                                            forward_pose(q, f_g, cfg).position.z());
        for (double g = 1e-4; g <= f_g - cfg.reference_tension; g += 1e-4) {
            const double z = forward_pose(q, f_g - g, cfg).position.z();
            const double r =
                cfg.contact_stiffness * std::max(0.0, surface_z - z) - g;
            if (prev >= 0.0 && r <= 0.0) {
                best = g;
                break;
            }
            prev = r;
        }
        CHECK(std::abs(f - best) < 2e-4);
    }

    SUBCASE("monotone non-decreasing as the surface rises") {
        const double f1 = contact_force(q, f_g, -736.0, cfg);
        const double f2 = contact_force(q, f_g, -733.0, cfg);
        const double f3 = contact_force(q, f_g, -730.0, cfg);
        CHECK(f1 <= f2);
        CHECK(f2 <= f3);
        CHECK(f1 > 0.0);
    }

    SUBCASE("saturates at the in-band force cap") {
        CHECK(contact_force(q, f_g, -600.0, cfg) ==
              doctest::Approx(f_g - cfg.reference_tension));
    }
}

#ifdef SCRUB_DEFAULT_PLANT_CFG
TEST_CASE("checked-in default config matches the built-in defaults") {
    const PlantConfig from_file = load_plant_config(SCRUB_DEFAULT_PLANT_CFG);
    const PlantConfig builtin;
    CHECK(from_file.tendon_radius == builtin.tendon_radius);
    CHECK(from_file.nominal_length == builtin.nominal_length);
    CHECK(from_file.c_axial == builtin.c_axial);
    CHECK(from_file.c_lateral == builtin.c_lateral);
    CHECK(from_file.contact_stiffness == builtin.contact_stiffness);
    CHECK(from_file.reference_tension == builtin.reference_tension);
    CHECK(from_file.noise_sigma == builtin.noise_sigma);
}
#endif

TEST_CASE("plant config file round-trip and errors") {
    const char* path = "plant_roundtrip.cfg";
    PlantConfig cfg;
    cfg.c_axial = 2.5;
    cfg.noise_sigma = 0.25;
    save_plant_config(cfg, path);
    const PlantConfig back = load_plant_config(path);
    CHECK(back.c_axial == cfg.c_axial);
    CHECK(back.noise_sigma == cfg.noise_sigma);
    CHECK(back.tendon_radius == cfg.tendon_radius);
    std::remove(path);

    {
        std::FILE* f = std::fopen("plant_bad.cfg", "w");
        std::fputs("c_axial = 3.0\nwibble = 1\n", f);
        std::fclose(f);
        CHECK_THROWS_WITH_AS(load_plant_config("plant_bad.cfg"),
                             doctest::Contains("line 2"), ParseError);
        std::remove("plant_bad.cfg");
    }
    {
        std::FILE* f = std::fopen("plant_bad2.cfg", "w");
        std::fputs("c_axial three\n", f);
        std::fclose(f);
        CHECK_THROWS_AS(load_plant_config("plant_bad2.cfg"), ParseError);
        std::remove("plant_bad2.cfg");
    }
    CHECK_THROWS_AS(load_plant_config("no_such_file.cfg"), ParseError);
}
