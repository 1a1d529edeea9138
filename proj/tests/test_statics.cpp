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
#include <limits>
#include <random>

#include "scrub/statics.hpp"

using namespace scrub;

TEST_CASE("tendon tension balances weight and contact force") {
    CHECK(tendon_tension(9.6, 3.0) == doctest::Approx(6.6).epsilon(1e-12));
    CHECK(tendon_tension(15.3, 8.5) == doctest::Approx(6.8).epsilon(1e-12));
    CHECK(tendon_tension(12.7, 0.0) == 12.7);  // free hang
    CHECK_THROWS_AS(tendon_tension(9.6, 9.7), InfeasibleLoadError);
    CHECK_THROWS_AS(tendon_tension(0.0, 0.0), InfeasibleLoadError);
    CHECK_THROWS_AS(tendon_tension(9.6, -0.1), InfeasibleLoadError);
}

TEST_CASE("force balance round-trip over random loads") {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> ug(6.2, 15.3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 10'000; ++i) {
        const double a = ug(rng);
        const double b = unit(rng) * a;
        const double t = tendon_tension(a, b);
        // Exact up to one rounding of the subtraction and one of the add.
        CHECK(std::abs((t + b) - a) <=
              2.0 * std::numeric_limits<double>::epsilon() * a);
    }
}

TEST_CASE("distribution membership is endpoint inclusive") {
    const OperatingRange range{6.2, 15.3};
    CHECK(check_in_distribution(6.8, range).in_distribution);
    CHECK(check_in_distribution(6.2, range).in_distribution);
    CHECK(check_in_distribution(15.3, range).in_distribution);
    const auto below = check_in_distribution(3.0, range);
    CHECK_FALSE(below.in_distribution);
    CHECK(below.note.find("outside") != std::string::npos);
}

TEST_CASE("maximum commandable force stays above the tested ramp top") {
    const OperatingRange range{6.2, 15.3};
    const double cap = max_commandable_force(15.3, range);
    CHECK(cap == doctest::Approx(9.1).epsilon(1e-12));
    CHECK(cap >= 8.5);
}

TEST_CASE("load state aggregates the balance") {
    const LoadState s = make_load_state(9.6, 3.0);
    CHECK(s.f_tendon == doctest::Approx(6.6).epsilon(1e-12));
    CHECK(s.f_gravity == 9.6);
    CHECK(s.f_normal == 3.0);
}
