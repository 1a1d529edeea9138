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

#include "scrub/image.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "scrub/errors.hpp"

namespace scrub {

RasterImage RasterImage::filled(int width, int height, std::uint8_t red,
                                std::uint8_t green, std::uint8_t blue) {
    RasterImage img;
    img.width = width;
    img.height = height;
    img.data.resize(static_cast<std::size_t>(width) * height * 3);
    for (std::size_t i = 0; i < img.data.size(); i += 3) {
        img.data[i] = red;
        img.data[i + 1] = green;
        img.data[i + 2] = blue;
    }
    return img;
}

long BinaryMask::count() const {
    long n = 0;
    for (std::uint8_t v : data) n += v != 0;
    return n;
}

BinaryMask BinaryMask::zeros(int width, int height) {
    BinaryMask m;
    m.width = width;
    m.height = height;
    m.data.assign(static_cast<std::size_t>(width) * height, 0);
    return m;
}

namespace {

// Reads the next header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in, const std::string& path) {
    std::string tok;
    int c = 0;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
            continue;
        }
        if (std::isspace(c)) {
            if (!tok.empty()) break;
            continue;
        }
        tok.push_back(static_cast<char>(c));
    }
    if (tok.empty()) {
        throw FormatError("pixmap: truncated header in " + path);
    }
    return tok;
}

int parse_int(const std::string& tok, const std::string& path) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw FormatError("pixmap: bad header value '" + tok + "' in " + path);
    }
}

}  // namespace

RasterImage read_pixmap(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("pixmap: cannot open " + path);

    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    if (m0 != 'P' || m1 != '6') {
        throw FormatError("pixmap: bad magic in " + path +
                          " (binary P6 expected)");
    }

    RasterImage img;
    img.width = parse_int(next_token(in, path), path);
    img.height = parse_int(next_token(in, path), path);
    const int maxval = parse_int(next_token(in, path), path);
    if (img.width <= 0 || img.height <= 0) {
        throw FormatError("pixmap: non-positive dimensions in " + path);
    }
    if (maxval != 255) {
        throw FormatError("pixmap: unsupported depth (maxval " +
                          std::to_string(maxval) + ", expected 255) in " +
                          path);
    }
    // The header ends with exactly one whitespace byte before the payload;
    // next_token already consumed it.

    const std::size_t bytes =
        static_cast<std::size_t>(img.width) * img.height * 3;
    img.data.resize(bytes);
    in.read(reinterpret_cast<char*>(img.data.data()),
            static_cast<std::streamsize>(bytes));
    if (static_cast<std::size_t>(in.gcount()) != bytes) {
        throw FormatError("pixmap: truncated pixel data in " + path);
    }
    return img;
}

void write_pixmap(const RasterImage& image, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("pixmap: cannot write " + path);
    out << "P6\n" << image.width << " " << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.data.data()),
              static_cast<std::streamsize>(image.data.size()));
}

GrayImage to_grayscale(const RasterImage& image) {
    GrayImage gray;
    gray.width = image.width;
    gray.height = image.height;
    gray.data.resize(static_cast<std::size_t>(image.width) * image.height);
    for (std::size_t i = 0; i < gray.data.size(); ++i) {
        const double luma = 0.299 * image.data[3 * i] +
                            0.587 * image.data[3 * i + 1] +
                            0.114 * image.data[3 * i + 2];
        gray.data[i] = static_cast<std::uint8_t>(std::lround(luma));
    }
    return gray;
}

BinaryMask threshold(const GrayImage& gray, int t, ThresholdMode mode) {
    BinaryMask mask = BinaryMask::zeros(gray.width, gray.height);
    for (std::size_t i = 0; i < gray.data.size(); ++i) {
        const int v = gray.data[i];
        mask.data[i] = (mode == ThresholdMode::kAbove) ? (v > t) : (v < t);
    }
    return mask;
}

}  // namespace scrub
