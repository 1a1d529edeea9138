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

#include "scrub/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "scrub/errors.hpp"

namespace scrub {

namespace {

// splitmix64; decouples per-sample streams from the corpus seed.
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

TendonConfig sample_config(std::mt19937_64& rng, const SampleBounds& bounds,
                           double tendon_radius) {
    std::uniform_real_distribution<double> kappa(bounds.kappa_min,
                                                 bounds.kappa_max);
    std::uniform_real_distribution<double> wrist_kappa(bounds.wrist_kappa_min,
                                                       bounds.wrist_kappa_max);
    std::uniform_real_distribution<double> phi(bounds.phi_min, bounds.phi_max);
    std::uniform_real_distribution<double> ell(bounds.ell_min, bounds.ell_max);

    for (int attempt = 0; attempt < 100; ++attempt) {
        try {
            // Fixed draw order keeps corpora reproducible: arc length,
            // positioning bend, wrist bend.
            const double length = ell(rng);
            const ArcParams body{kappa(rng), phi(rng), length};
            const ArcParams wrist{wrist_kappa(rng), phi(rng), length};
            return TendonConfig::from_arcs({body, body, wrist}, tendon_radius);
        } catch (const EnvelopeError&) {
            continue;  // resample
        }
    }
    throw EnvelopeError(
        "sample_config: bounds produce no valid tendon lengths in 100 draws");
}

Dataset generate(const DatasetSpec& spec, const PlantConfig& plant) {
    if (spec.samples_per_level <= 0) {
        throw std::domain_error("generate: samples_per_level must be > 0");
    }
    const OperatingRange range;
    for (double w : spec.weight_levels) {
        if (!check_in_distribution(w, range).in_distribution) {
            throw std::domain_error("generate: weight level outside operating range");
        }
    }

    PlantConfig effective = plant;
    effective.noise_sigma = spec.noise_sigma;

    Dataset out;
    out.samples.resize(spec.weight_levels.size() *
                       static_cast<std::size_t>(spec.samples_per_level));
    for (std::size_t li = 0; li < spec.weight_levels.size(); ++li) {
        const double weight = spec.weight_levels[li];
        for (int si = 0; si < spec.samples_per_level; ++si) {
            const std::size_t index = li * spec.samples_per_level + si;
            std::mt19937_64 rng(mix(spec.seed + index));
            Sample& s = out.samples[index];
            s.q = sample_config(rng, spec.bounds, effective.tendon_radius);
            s.f_tendon = weight;  // free hang: tension equals the weight
            s.pose = forward_pose(s.q, weight, effective,
                                  mix(spec.seed + index) + 1);
        }
    }
    return out;
}

std::pair<Dataset, Dataset> split(const Dataset& dataset,
                                  double train_fraction, std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw std::domain_error("split: train_fraction must lie in (0,1)");
    }
    std::vector<std::size_t> idx(dataset.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(idx.begin(), idx.end(), rng);

    const auto n_train = static_cast<std::size_t>(
        std::llround(train_fraction * static_cast<double>(dataset.size())));
    Dataset train, val;
    train.samples.reserve(n_train);
    val.samples.reserve(dataset.size() - n_train);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        (i < n_train ? train : val).samples.push_back(dataset.samples[idx[i]]);
    }
    return {std::move(train), std::move(val)};
}

void save_dataset(const Dataset& dataset, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw ParseError("dataset: cannot write " + path);
    std::fputs(dataset_header(), f);
    std::fputc('\n', f);
    for (const Sample& s : dataset.samples) {
        for (int i = 0; i < 9; ++i) std::fprintf(f, "%.9g,", s.q.lengths[i]);
        const auto v = s.pose.as_vector();
        for (int i = 0; i < 7; ++i) std::fprintf(f, "%.9g,", v[i]);
        std::fprintf(f, "%.9g\n", s.f_tendon);
    }
    std::fclose(f);
}

Dataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("dataset: cannot open " + path);
    Dataset out;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != dataset_header()) {
                throw ParseError("dataset: unexpected header on line " +
                                 std::to_string(lineno));
            }
            header_seen = true;
            continue;
        }
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> tokens;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            tokens.push_back(line.substr(
                start, comma == std::string::npos ? std::string::npos
                                                  : comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (tokens.size() != 17) {
            throw ParseError("dataset: expected 17 columns on line " +
                             std::to_string(lineno) + ", got " +
                             std::to_string(tokens.size()));
        }
        std::array<double, 17> v{};
        for (std::size_t i = 0; i < 17; ++i) {
            try {
                std::size_t used = 0;
                v[i] = std::stod(tokens[i], &used);
                if (used != tokens[i].size()) {
                    throw std::invalid_argument(tokens[i]);
                }
            } catch (const std::exception&) {
                throw ParseError("dataset: bad value '" + tokens[i] +
                                 "' on line " + std::to_string(lineno));
            }
        }
        Sample s;
        for (int i = 0; i < 9; ++i) s.q.lengths[i] = v[i];
        // Values pass through untouched so a save/load cycle is a fixed
        // point of the text representation; consumers normalize quaternions
        // on ingest.
        s.pose.position = Eigen::Vector3d(v[9], v[10], v[11]);
        s.pose.orientation = Eigen::Quaterniond(v[12], v[13], v[14], v[15]);
        s.f_tendon = v[16];
        out.samples.push_back(s);
    }
    if (!header_seen) throw ParseError("dataset: missing header in " + path);
    return out;
}

}  // namespace scrub
