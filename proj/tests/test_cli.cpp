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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
    const char* env = std::getenv("SCRUB_CLI");
    REQUIRE(env != nullptr);
    return env;
}

std::string fixtures_dir() {
    const char* env = std::getenv("SCRUB_FIXTURES");
    REQUIRE(env != nullptr);
    return env;
}

int run(const std::string& args, const std::string& log = "cli_log.txt") {
    const std::string cmd =
        "\"" + cli_path() + "\" " + args + " > " + log + " 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in),
            std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("brush sweep emits the expected backlash value at 11 N") {
    REQUIRE(run("brush --mu 0.93 --ro 35 --ri 25 --fmax 11 --out "
                "cli_brush.csv") == 0);
    const std::string text = slurp("cli_brush.csv");
    CHECK(text.find("# config: mu=0.93") != std::string::npos);
    CHECK(text.find("force_N,moment_uni_Nmm,moment_cr_Nmm,"
                    "moment_backlash_Nmm") != std::string::npos);

    // Find the F=11 row and check the backlash column.
    std::istringstream lines(text);
    std::string line;
    bool found = false;
    while (std::getline(lines, line)) {
        if (line.rfind("11,", 0) == 0) {
            const auto last = line.rfind(',');
            CHECK(std::stod(line.substr(last + 1)) ==
                  doctest::Approx(50.34).epsilon(1e-9));
            found = true;
        }
    }
    CHECK(found);
    fs::remove("cli_brush.csv");
}

TEST_CASE("dataset generation is byte-identical per seed") {
    REQUIRE(run("dataset --out cli_ds_a.csv --seed 7 --per-level 40") == 0);
    REQUIRE(run("dataset --out cli_ds_b.csv --seed 7 --per-level 40") == 0);
    CHECK(slurp("cli_ds_a.csv") == slurp("cli_ds_b.csv"));

    REQUIRE(run("dataset --out cli_ds_c.csv --seed 8 --per-level 40") == 0);
    CHECK(slurp("cli_ds_a.csv") != slurp("cli_ds_c.csv"));
    fs::remove("cli_ds_a.csv");
    fs::remove("cli_ds_b.csv");
    fs::remove("cli_ds_c.csv");
}

TEST_CASE("clean reports the fixture ground truth exactly") {
    const std::string fx = fixtures_dir();
    REQUIRE(run("clean --before " + fx + "/plate_before.ppm --after " + fx +
                "/plate_after.ppm --surface plate --masks cli_masks") == 0);
    const std::string out = slurp("cli_log.txt");
    CHECK(out.find("before_px=17600") != std::string::npos);
    CHECK(out.find("after_px=264") != std::string::npos);
    CHECK(out.find("cleaned_pct=98.5") != std::string::npos);
    CHECK(fs::exists("cli_masks/roi_before.ppm"));
    CHECK(fs::exists("cli_masks/mask_after.ppm"));
    fs::remove_all("cli_masks");

    REQUIRE(run("clean --before " + fx + "/seat_before.ppm --after " + fx +
                "/seat_after.ppm --surface seat") == 0);
    const std::string seat = slurp("cli_log.txt");
    CHECK(seat.find("before_px=4276") != std::string::npos);
    CHECK(seat.find("after_px=100") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2, file errors with 1") {
    CHECK(run("brush --no-such-flag") == 2);
    CHECK(run("definitely-not-a-subcommand") == 2);
    CHECK(run("train --data missing.csv --out m.txt") == 1);
    CHECK(run("clean --before nope.ppm --after nope.ppm --surface plate") ==
          1);
}

TEST_CASE("dataset/train/track/force round trip at toy scale") {
    REQUIRE(run("dataset --out cli_small.csv --seed 3 --per-level 60") == 0);
    REQUIRE(run("train --data cli_small.csv --hidden 24 --epochs 4 --seed 3 "
                "--out cli_model.txt") == 0);
    REQUIRE(fs::exists("cli_model.txt"));

    REQUIRE(run("track --model cli_model.txt --out cli_track.csv --waypoints "
                "12 --fg 9.6") == 0);
    const std::string track = slurp("cli_track.csv");
    CHECK(track.find("waypoint,target_x") != std::string::npos);
    CHECK(track.find("# mean_err_mm=") != std::string::npos);

    REQUIRE(run("force --model cli_model.txt --out cli_force.csv --steps 5 "
                "--svg cli_force.svg") == 0);
    const std::string force = slurp("cli_force.csv");
    CHECK(force.find("delta_r,K,b,R2,gain_err_pct") != std::string::npos);
    CHECK(force.find("# ref delta_r=75 R2=0.995") != std::string::npos);
    CHECK(slurp("cli_force.svg").find("<svg") == 0);

    for (const char* f : {"cli_small.csv", "cli_model.txt", "cli_track.csv",
                          "cli_force.csv", "cli_force.svg", "cli_log.txt"}) {
        fs::remove(f);
    }
}
