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

// Regenerates the synthetic plate and seat fixtures checked in under
// tests/fixtures. Contamination patches are axis-aligned rectangles placed
// strictly inside the regions of interest so their pixel counts are exact
// by construction:
//   plate  before 17600 px, after 264 px
//   seat   before  4276 px, after 100 px
// Both images also carry decoy patches outside the ROI (rim glow on the
// plate, shadow bands near the seat edges) that must not be counted.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "scrub/image.hpp"

using scrub::RasterImage;

namespace {

void draw_disc(RasterImage& img, double cx, double cy, double r,
               std::uint8_t red, std::uint8_t green, std::uint8_t blue) {
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const double dx = x - cx;
            const double dy = y - cy;
            if (dx * dx + dy * dy <= r * r) img.set(x, y, red, green, blue);
        }
    }
}

void draw_rect(RasterImage& img, int x0, int y0, int w, int h,
               std::uint8_t red, std::uint8_t green, std::uint8_t blue) {
    for (int y = y0; y < y0 + h; ++y) {
        for (int x = x0; x < x0 + w; ++x) img.set(x, y, red, green, blue);
    }
}

// Annular arc band between radii [r0, r1] within +-half_deg of center_deg.
void draw_arc_band(RasterImage& img, double cx, double cy, double r0,
                   double r1, double center_deg, double half_deg,
                   std::uint8_t red, std::uint8_t green, std::uint8_t blue) {
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const double dx = x - cx;
            const double dy = y - cy;
            const double r = std::hypot(dx, dy);
            if (r < r0 || r > r1) continue;
            double ang = std::atan2(dy, dx) * 180.0 / std::numbers::pi;
            double diff = std::fmod(ang - center_deg + 540.0, 360.0) - 180.0;
            if (std::abs(diff) <= half_deg) img.set(x, y, red, green, blue);
        }
    }
}

RasterImage plate_base() {
    RasterImage img = RasterImage::filled(640, 640, 0, 0, 0);
    draw_disc(img, 320, 320, 260, 235, 235, 235);
    // Rim glow: red bands inside the plate but outside the padded ROI.
    for (double deg : {45.0, 135.0, 225.0, 315.0}) {
        draw_arc_band(img, 320, 320, 240, 252, deg, 20.0, 200, 40, 30);
    }
    return img;
}

RasterImage seat_base() {
    RasterImage img = RasterImage::filled(640, 640, 0, 0, 0);
    draw_disc(img, 320, 320, 280, 225, 225, 225);
    draw_disc(img, 320, 320, 150, 0, 0, 0);  // opening
    // Shadow decoys: one band hugging the outer edge, one hugging the
    // opening; both fall inside the pads and stay uncounted.
    draw_rect(img, 305, 42, 30, 20, 40, 35, 30);
    draw_rect(img, 308, 160, 24, 16, 40, 35, 30);
    return img;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string outdir = argc > 1 ? argv[1] : "tests/fixtures";

    {
        RasterImage before = plate_base();
        draw_rect(before, 250, 200, 100, 60, 180, 30, 20);
        draw_rect(before, 380, 320, 80, 80, 180, 30, 20);
        draw_rect(before, 200, 380, 120, 30, 180, 30, 20);
        draw_rect(before, 300, 150, 40, 40, 180, 30, 20);
        write_pixmap(before, outdir + "/plate_before.ppm");

        RasterImage after = plate_base();
        draw_rect(after, 300, 220, 20, 10, 180, 30, 20);
        draw_rect(after, 400, 350, 8, 8, 180, 30, 20);
        write_pixmap(after, outdir + "/plate_after.ppm");
        std::printf("plate: before 17600 px, after 264 px\n");
    }
    {
        RasterImage before = seat_base();
        draw_rect(before, 300, 90, 40, 30, 40, 35, 30);
        draw_rect(before, 512, 300, 40, 40, 40, 35, 30);
        draw_rect(before, 160, 455, 24, 24, 40, 35, 30);
        draw_rect(before, 90, 300, 30, 30, 40, 35, 30);
        write_pixmap(before, outdir + "/seat_before.ppm");

        RasterImage after = seat_base();
        draw_rect(after, 515, 310, 10, 10, 40, 35, 30);
        write_pixmap(after, outdir + "/seat_after.ppm");
        std::printf("seat: before 4276 px, after 100 px\n");
    }
    std::printf("fixtures written to %s\n", outdir.c_str());
    return 0;
}
