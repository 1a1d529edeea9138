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

#include <cstdio>
#include <fstream>

#include "scrub/errors.hpp"
#include "scrub/image.hpp"

using namespace scrub;

TEST_CASE("pixmap round-trip") {
    RasterImage img = RasterImage::filled(3, 2, 0, 0, 0);
    img.set(0, 0, 255, 0, 0);
    img.set(1, 0, 0, 255, 0);
    img.set(2, 0, 0, 0, 255);
    img.set(0, 1, 10, 20, 30);
    img.set(1, 1, 200, 201, 202);
    img.set(2, 1, 255, 255, 255);

    const char* path = "roundtrip.ppm";
    write_pixmap(img, path);
    const RasterImage back = read_pixmap(path);
    CHECK(back.width == 3);
    CHECK(back.height == 2);
    CHECK(back.data == img.data);
    std::remove(path);
}

TEST_CASE("pixmap header handling") {
    SUBCASE("comments are tolerated") {
        std::ofstream out("commented.ppm", std::ios::binary);
        out << "P6\n# a comment\n2 # trailing\n1\n# another\n255\n";
        const char px[6] = {10, 20, 30, 40, 50, 60};
        out.write(px, 6);
        out.close();
        const RasterImage img = read_pixmap("commented.ppm");
        CHECK(img.width == 2);
        CHECK(img.height == 1);
        CHECK(img.r(1, 0) == 40);
        std::remove("commented.ppm");
    }
    SUBCASE("16-bit depth is rejected explicitly") {
        std::ofstream out("deep.ppm", std::ios::binary);
        out << "P6\n1 1\n65535\n";
        const char px[6] = {0, 0, 0, 0, 0, 0};
        out.write(px, 6);
        out.close();
        CHECK_THROWS_WITH_AS(read_pixmap("deep.ppm"),
                             doctest::Contains("unsupported depth"),
                             FormatError);
        std::remove("deep.ppm");
    }
    SUBCASE("wrong magic") {
        std::ofstream out("ascii.ppm", std::ios::binary);
        out << "P3\n1 1\n255\n0 0 0\n";
        out.close();
        CHECK_THROWS_AS(read_pixmap("ascii.ppm"), FormatError);
        std::remove("ascii.ppm");
    }
    SUBCASE("truncated payload") {
        std::ofstream out("short.ppm", std::ios::binary);
        out << "P6\n2 2\n255\n";
        const char px[5] = {1, 2, 3, 4, 5};
        out.write(px, 5);
        out.close();
        CHECK_THROWS_AS(read_pixmap("short.ppm"), FormatError);
        std::remove("short.ppm");
    }
    CHECK_THROWS_AS(read_pixmap("does_not_exist.ppm"), FormatError);
}

TEST_CASE("grayscale conversion") {
    RasterImage img = RasterImage::filled(3, 1, 0, 0, 0);
    img.set(0, 0, 255, 255, 255);
    img.set(1, 0, 255, 0, 0);
    img.set(2, 0, 137, 137, 137);
    const GrayImage gray = to_grayscale(img);
    CHECK(gray.at(0, 0) == 255);
    CHECK(gray.at(1, 0) == 76);  // round(0.299*255)
    CHECK(gray.at(2, 0) == 137); // neutral input passes through
}

TEST_CASE("threshold is strict on both sides") {
    RasterImage img = RasterImage::filled(4, 1, 0, 0, 0);
    img.set(0, 0, 255, 255, 255);
    img.set(1, 0, 200, 200, 200);
    img.set(2, 0, 201, 201, 201);
    img.set(3, 0, 150, 150, 150);
    const GrayImage gray = to_grayscale(img);

    const BinaryMask above = threshold(gray, 200, ThresholdMode::kAbove);
    CHECK(above.at(0, 0));
    CHECK_FALSE(above.at(1, 0));  // exactly 200 excluded
    CHECK(above.at(2, 0));
    CHECK_FALSE(above.at(3, 0));

    const BinaryMask below = threshold(gray, 150, ThresholdMode::kBelow);
    CHECK_FALSE(below.at(3, 0));  // exactly 150 excluded

    // Above-t and below-or-equal-t cover every pixel.
    const BinaryMask below_eq = threshold(gray, 201, ThresholdMode::kBelow);
    for (int x = 0; x < 4; ++x) {
        CHECK((above.at(x, 0) || below_eq.at(x, 0)));
    }

    // A uniform bright image is all true.
    const RasterImage white = RasterImage::filled(5, 5, 255, 255, 255);
    CHECK(threshold(to_grayscale(white), 200, ThresholdMode::kAbove).count() ==
          25);
}
