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

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <set>

#include "scrub/dataset.hpp"
#include "scrub/errors.hpp"

using namespace scrub;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in),
            std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("zero-width bounds pin the straight configuration") {
    SampleBounds bounds;
    bounds.kappa_min = bounds.kappa_max = 0.0;
    bounds.wrist_kappa_min = bounds.wrist_kappa_max = 0.0;
    bounds.phi_min = bounds.phi_max = 0.0;
    bounds.ell_min = bounds.ell_max = 710.0 / 3.0;
    std::mt19937_64 rng(1);
    const TendonConfig q = sample_config(rng, bounds, 40.0);
    for (int i = 0; i < 9; ++i) {
        CHECK(q.lengths[i] == doctest::Approx(710.0 / 3.0).epsilon(1e-12));
    }
}

TEST_CASE("sampled configurations round-trip through arc parameters") {
    SampleBounds bounds;
    std::mt19937_64 rng(2);
    for (int i = 0; i < 500; ++i) {
        const TendonConfig q = sample_config(rng, bounds, 40.0);
        for (int s = 0; s < 3; ++s) {
            const Eigen::Vector3d l = q.stage(s);
            const ArcParams arc = tendons_to_arc(l[0], l[1], l[2], 40.0);
            const Eigen::Vector3d back = arc_to_tendons(arc, 40.0);
            CHECK((back - l).cwiseAbs().maxCoeff() < 1e-9);
        }
    }
}

TEST_CASE("sampling is deterministic per seed") {
    SampleBounds bounds;
    std::mt19937_64 a(42), b(42);
    for (int i = 0; i < 2000; ++i) {
        const TendonConfig qa = sample_config(a, bounds, 40.0);
        const TendonConfig qb = sample_config(b, bounds, 40.0);
        CHECK(qa.lengths == qb.lengths);
    }
}

TEST_CASE("impossible bounds fail after bounded retries") {
    SampleBounds bounds;
    bounds.kappa_min = bounds.kappa_max = 0.05;  // kappa*d = 2, length <= 0
    std::mt19937_64 rng(3);
    CHECK_THROWS_AS(sample_config(rng, bounds, 40.0), EnvelopeError);
}

TEST_CASE("default corpus shape") {
    const PlantConfig plant;
    DatasetSpec spec;
    spec.seed = 7;
    const Dataset ds = generate(spec, plant);
    CHECK(ds.size() == 10'000);

    std::set<double> tensions;
    for (const Sample& s : ds.samples) tensions.insert(s.f_tendon);
    CHECK(tensions.size() == 5);
    for (double t : tensions) {
        CHECK(check_in_distribution(t).in_distribution);
    }

    // 2000 per level, level-major order.
    for (std::size_t li = 0; li < 5; ++li) {
        for (std::size_t si = 0; si < 2000; ++si) {
            CHECK(ds.samples[li * 2000 + si].f_tendon ==
                  spec.weight_levels[li]);
        }
    }

    // Poses agree with the plant replayed on the stored configuration.
    for (std::size_t i = 0; i < ds.size(); i += 997) {
        const Pose replay = forward_pose(ds.samples[i].q,
                                         ds.samples[i].f_tendon, plant);
        CHECK((replay.position - ds.samples[i].pose.position).norm() < 1e-12);
    }

    // No duplicate configurations.
    std::vector<std::array<double, 9>> keys(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (int j = 0; j < 9; ++j) keys[i][j] = ds.samples[i].q.lengths[j];
    }
    std::sort(keys.begin(), keys.end());
    CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("single level single sample") {
    const PlantConfig plant;
    DatasetSpec spec;
    spec.weight_levels = {9.6};
    spec.samples_per_level = 1;
    const Dataset ds = generate(spec, plant);
    CHECK(ds.size() == 1);
    CHECK(ds.samples[0].f_tendon == 9.6);
}

TEST_CASE("corpus regeneration is bit identical") {
    const PlantConfig plant;
    DatasetSpec spec;
    spec.seed = 42;
    spec.samples_per_level = 100;
    const Dataset a = generate(spec, plant);
    const Dataset b = generate(spec, plant);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.samples[i].q.lengths == b.samples[i].q.lengths);
        CHECK(a.samples[i].pose.position == b.samples[i].pose.position);
    }
}

TEST_CASE("split is seeded, disjoint and exhaustive") {
    const PlantConfig plant;
    DatasetSpec spec;
    spec.seed = 5;
    const Dataset ds = generate(spec, plant);
    const auto [train, val] = split(ds, 0.8, 9);
    CHECK(train.size() == 8000);
    CHECK(val.size() == 2000);

    auto key = [](const Sample& s) {
        std::array<double, 10> k{};
        for (int j = 0; j < 9; ++j) k[j] = s.q.lengths[j];
        k[9] = s.f_tendon;
        return k;
    };
    std::vector<std::array<double, 10>> all, merged;
    for (const auto& s : ds.samples) all.push_back(key(s));
    for (const auto& s : train.samples) merged.push_back(key(s));
    for (const auto& s : val.samples) merged.push_back(key(s));
    std::sort(all.begin(), all.end());
    std::sort(merged.begin(), merged.end());
    CHECK(all == merged);

    const auto [train2, val2] = split(ds, 0.8, 9);
    CHECK(train2.samples[0].q.lengths == train.samples[0].q.lengths);
    CHECK(val2.samples.back().q.lengths == val.samples.back().q.lengths);

    CHECK_THROWS_AS(split(ds, 0.0, 1), std::domain_error);
    CHECK_THROWS_AS(split(ds, 1.0, 1), std::domain_error);
}

TEST_CASE("csv round-trip") {
    const PlantConfig plant;
    DatasetSpec spec;
    spec.seed = 11;
    spec.weight_levels = {6.2, 15.3};
    spec.samples_per_level = 50;
    const Dataset ds = generate(spec, plant);

    const std::string path = "dataset_roundtrip.csv";
    save_dataset(ds, path);

    const std::string text = slurp(path);
    CHECK(text.rfind("l1,l2,l3,l4,l5,l6,l7,l8,l9,x,y,z,qw,qx,qy,qz,Ft\n", 0) ==
          0);

    const Dataset back = load_dataset(path);
    REQUIRE(back.size() == ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        CHECK((back.samples[i].q.lengths - ds.samples[i].q.lengths)
                  .cwiseAbs()
                  .maxCoeff() < 1e-6);
        CHECK(back.samples[i].f_tendon ==
              doctest::Approx(ds.samples[i].f_tendon).epsilon(1e-9));
    }

    // Text representation is a fixed point of one save/load cycle.
    const std::string path2 = "dataset_roundtrip2.csv";
    save_dataset(back, path2);
    CHECK(slurp(path2) == text);
    std::remove(path.c_str());
    std::remove(path2.c_str());
}

TEST_CASE("csv with wrong column count names the line") {
    const std::string path = "dataset_bad.csv";
    {
        std::ofstream out(path);
        out << dataset_header() << "\n";
        out << "1,2,3,4,5,6,7,8,9,0,0,-710,1,0,0,0,6.2\n";
        out << "1,2,3,4,5\n";
    }
    CHECK_THROWS_WITH_AS(load_dataset(path), doctest::Contains("line 3"),
                         ParseError);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_dataset("missing_dataset.csv"), ParseError);
}
