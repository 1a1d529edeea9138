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

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "scrub/plant.hpp"
#include "scrub/pose.hpp"
#include "scrub/statics.hpp"

// Synthetic force-deflection corpus: on-manifold configurations are drawn
// in arc-parameter space (which guarantees a valid tendon triple per
// stage), executed on the plant at a set of free-hang weight levels, and
// stored as (tendon lengths, pose, tension) rows.

namespace scrub {

struct Sample {
    Pose pose;
    double f_tendon = 0.0;  // N
    TendonConfig q;
};

struct Dataset {
    std::vector<Sample> samples;
    std::size_t size() const { return samples.size(); }
};

/// Uniform sampling ranges in arc-parameter space. A physical tendon arm
/// settles into a single elastic equilibrium shape for any commanded tip
/// pose, so the corpus must be the graph of a function pose -> lengths;
/// independent per-stage bends would instead give every pose a whole family
/// of preimages and no learnable inverse. The draw therefore couples the
/// stages: the proximal two share one positioning bend (kappa, phi), the
/// distal stage adds an independent wrist bend (its kappa range reaches
/// twice the positioning range so tool-down tip orientations stay inside
/// the corpus), and all three stages share one arc length.
struct SampleBounds {
    double kappa_min = 0.0, kappa_max = 0.0010;        // 1/mm, stages 1-2
    double wrist_kappa_min = 0.0, wrist_kappa_max = 0.0024;  // 1/mm, stage 3
    double phi_min = 0.0, phi_max = 6.283185307179586;  // rad, both bends
    double ell_min = 210.0, ell_max = 250.0;            // mm, per stage
};

struct DatasetSpec {
    std::vector<double> weight_levels = default_weight_levels();
    int samples_per_level = 2000;
    std::uint64_t seed = 0;
    double noise_sigma = 0.0;  // mm, measurement noise on stored poses
    SampleBounds bounds;

    static std::vector<double> default_weight_levels() {
        // Five evenly spaced free-hang weights across the operating range.
        return {6.2, 8.475, 10.75, 13.025, 15.3};
    }
};

/// Draws one on-manifold configuration from the bounds. Draws that land
/// outside the tendon envelope are rejected and retried (at most 100 times).
TendonConfig sample_config(std::mt19937_64& rng, const SampleBounds& bounds,
                           double tendon_radius);

/// Generates |weight_levels| * samples_per_level samples, in level-major
/// order. Each sample is reproduced from a seed derived from (spec.seed,
/// index), so the corpus is identical no matter how generation is
/// scheduled.
Dataset generate(const DatasetSpec& spec, const PlantConfig& plant);

/// Seeded random split into (train, validation); disjoint and exhaustive.
std::pair<Dataset, Dataset> split(const Dataset& dataset,
                                  double train_fraction, std::uint64_t seed);

/// CSV persistence: one header line naming the 17 columns
/// l1..l9,x,y,z,qw,qx,qy,qz,Ft, then one row per sample at 9 significant
/// digits. Leading '#' lines are skipped on load. Malformed rows raise
/// ParseError naming the line.
void save_dataset(const Dataset& dataset, const std::string& path);
Dataset load_dataset(const std::string& path);

inline const char* dataset_header() {
    return "l1,l2,l3,l4,l5,l6,l7,l8,l9,x,y,z,qw,qx,qy,qz,Ft";
}

}  // namespace scrub
