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
#include <string>
#include <vector>

// 8-bit RGB rasters with binary portable-pixmap (P6) persistence, plus the
// grayscale/threshold front end of the contamination metrics.

namespace scrub {

struct RasterImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // row-major RGB triples

    std::uint8_t r(int x, int y) const { return data[3 * (y * width + x)]; }
    std::uint8_t g(int x, int y) const { return data[3 * (y * width + x) + 1]; }
    std::uint8_t b(int x, int y) const { return data[3 * (y * width + x) + 2]; }
    void set(int x, int y, std::uint8_t red, std::uint8_t green,
             std::uint8_t blue) {
        const std::size_t i = 3 * (static_cast<std::size_t>(y) * width + x);
        data[i] = red;
        data[i + 1] = green;
        data[i + 2] = blue;
    }
    static RasterImage filled(int width, int height, std::uint8_t red,
                              std::uint8_t green, std::uint8_t blue);
};

struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    std::uint8_t at(int x, int y) const { return data[y * width + x]; }
};

struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // 0 or 1 per pixel

    bool at(int x, int y) const { return data[y * width + x] != 0; }
    void set(int x, int y, bool v) {
        data[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0;
    }
    long count() const;
    static BinaryMask zeros(int width, int height);
};

/// Binary portable pixmap (magic P6, maxval 255). Header comments are
/// tolerated. Other magics or depths raise FormatError; a 16-bit maxval is
/// called out as unsupported depth.
RasterImage read_pixmap(const std::string& path);
void write_pixmap(const RasterImage& image, const std::string& path);

/// Luma conversion round(0.299 R + 0.587 G + 0.114 B).
GrayImage to_grayscale(const RasterImage& image);

enum class ThresholdMode { kAbove, kBelow };

/// Strict comparison against the threshold: kAbove keeps value > t, kBelow
/// keeps value < t.
BinaryMask threshold(const GrayImage& gray, int t, ThresholdMode mode);

}  // namespace scrub
