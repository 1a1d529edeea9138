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
#include <ostream>
#include <string>

#include "scrub/plant.hpp"

// End-to-end experiment pipeline: brush sweep, corpus generation, model
// training (load-aware and single-load baseline), circle tracking, force
// ramps and the fixture cleaning metrics, all emitted as CSV plus a
// summary table. Deterministic for a fixed seed; no clocks inside data
// files.

namespace scrub {

struct ReportOptions {
    std::string outdir = "report";
    std::string fixtures_dir = "tests/fixtures";
    std::uint64_t seed = 42;
    int hidden_width = 128;
    int epochs = 50;
    PlantConfig plant;
};

/// Runs the whole pipeline, writing CSVs and summary.txt under
/// options.outdir and mirroring the summary to `log`. Returns 0 on
/// success.
int run_report(const ReportOptions& options, std::ostream& log);

/// Shared CSV front matter: tool banner plus the resolved configuration
/// (never a timestamp, so reruns are byte-identical).
void write_csv_header(std::ostream& out, const std::string& subcommand,
                      const std::string& config_line);

inline const char* kToolVersion = "scrub 0.1.0";

}  // namespace scrub
