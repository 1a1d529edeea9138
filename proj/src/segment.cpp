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

#include "scrub/segment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "scrub/errors.hpp"

namespace scrub {

std::int32_t Labeling::largest() const {
    std::int32_t best = -1;
    long best_area = 0;
    for (std::size_t i = 0; i < areas.size(); ++i) {
        if (areas[i] > best_area) {
            best_area = areas[i];
            best = static_cast<std::int32_t>(i);
        }
    }
    return best;
}

Labeling connected_components(const BinaryMask& mask) {
    Labeling out;
    out.width = mask.width;
    out.height = mask.height;
    out.labels.assign(mask.data.size(), -1);

    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < mask.data.size(); ++start) {
        if (!mask.data[start] || out.labels[start] != -1) continue;
        const auto label = static_cast<std::int32_t>(out.areas.size());
        long area = 0;
        stack.push_back(start);
        out.labels[start] = label;
        while (!stack.empty()) {
            const std::size_t p = stack.back();
            stack.pop_back();
            ++area;
            const int x = static_cast<int>(p % mask.width);
            const int y = static_cast<int>(p / mask.width);
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    const int nx = x + dx;
                    const int ny = y + dy;
                    if (nx < 0 || ny < 0 || nx >= mask.width ||
                        ny >= mask.height) {
                        continue;
                    }
                    const std::size_t np =
                        static_cast<std::size_t>(ny) * mask.width + nx;
                    if (mask.data[np] && out.labels[np] == -1) {
                        out.labels[np] = label;
                        stack.push_back(np);
                    }
                }
            }
        }
        out.areas.push_back(area);
    }
    return out;
}

std::vector<PixelCoord> boundary_contour(const Labeling& labeling,
                                         std::int32_t label) {
    if (label < 0 || static_cast<std::size_t>(label) >= labeling.areas.size()) {
        throw std::domain_error("boundary_contour: invalid label");
    }
    // Row-major first pixel of the component.
    int sx = -1, sy = -1;
    for (int y = 0; y < labeling.height && sx < 0; ++y) {
        for (int x = 0; x < labeling.width; ++x) {
            if (labeling.at(x, y) == label) {
                sx = x;
                sy = y;
                break;
            }
        }
    }
    if (sx < 0) throw std::domain_error("boundary_contour: empty component");

    auto inside = [&](int x, int y) {
        return x >= 0 && y >= 0 && x < labeling.width && y < labeling.height &&
               labeling.at(x, y) == label;
    };

    // Moore neighborhood, clockwise starting west.
    static const int dx8[8] = {-1, -1, 0, 1, 1, 1, 0, -1};
    static const int dy8[8] = {0, -1, -1, -1, 0, 1, 1, 1};

    std::vector<PixelCoord> contour;
    if (labeling.areas[label] == 1) {
        contour.push_back({sx, sy});
        return contour;
    }

    auto next_move = [&](int cx, int cy, int backtrack) {
        const int dir = (backtrack + 1) % 8;
        for (int k = 0; k < 8; ++k) {
            const int d = (dir + k) % 8;
            if (inside(cx + dx8[d], cy + dy8[d])) return d;
        }
        return -1;
    };

    // The scan enters the start pixel from the west (its west neighbor is
    // background by the row-major choice of start). Stop when the trace is
    // back at the start about to repeat its first move.
    int cx = sx, cy = sy;
    int backtrack = 0;
    const int first = next_move(cx, cy, backtrack);
    if (first < 0) {
        contour.push_back({sx, sy});
        return contour;  // isolated pixel in a component marked larger
    }
    contour.push_back({sx, sy});
    const int p1x = sx + dx8[first];
    const int p1y = sy + dy8[first];
    contour.push_back({p1x, p1y});
    cx = p1x;
    cy = p1y;
    backtrack = (first + 4) % 8;

    const std::size_t guard =
        8 * static_cast<std::size_t>(labeling.areas[label]) + 16;
    for (std::size_t steps = 0; steps < guard; ++steps) {
        const int found = next_move(cx, cy, backtrack);
        if (found < 0) break;
        const int nx = cx + dx8[found];
        const int ny = cy + dy8[found];
        if (cx == sx && cy == sy && nx == p1x && ny == p1y) break;
        cx = nx;
        cy = ny;
        backtrack = (found + 4) % 8;
        if (!(cx == sx && cy == sy)) contour.push_back({cx, cy});
    }
    return contour;
}

namespace {

bool in_circle(const Circle& c, double x, double y, double slack = 1e-10) {
    const double dx = x - c.cx;
    const double dy = y - c.cy;
    return dx * dx + dy * dy <= (c.radius + slack) * (c.radius + slack);
}

Circle circle_two(double ax, double ay, double bx, double by) {
    Circle c;
    c.cx = 0.5 * (ax + bx);
    c.cy = 0.5 * (ay + by);
    c.radius = 0.5 * std::hypot(ax - bx, ay - by);
    return c;
}

Circle circumcircle(double ax, double ay, double bx, double by, double cx,
                    double cy) {
    const double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    if (std::abs(d) < 1e-12) {
        // Collinear: the diameter circle of the farthest pair contains all.
        Circle c1 = circle_two(ax, ay, bx, by);
        Circle c2 = circle_two(ax, ay, cx, cy);
        Circle c3 = circle_two(bx, by, cx, cy);
        Circle best = c1;
        if (c2.radius > best.radius) best = c2;
        if (c3.radius > best.radius) best = c3;
        return best;
    }
    const double a2 = ax * ax + ay * ay;
    const double b2 = bx * bx + by * by;
    const double c2 = cx * cx + cy * cy;
    Circle c;
    c.cx = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d;
    c.cy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d;
    c.radius = std::hypot(ax - c.cx, ay - c.cy);
    return c;
}

}  // namespace

Circle min_enclosing_circle(std::span<const std::pair<double, double>> points,
                            std::uint64_t seed) {
    if (points.empty()) {
        throw std::domain_error("min_enclosing_circle: no points");
    }
    std::vector<std::pair<double, double>> p(points.begin(), points.end());
    std::mt19937_64 rng(seed);
    std::shuffle(p.begin(), p.end(), rng);

    Circle c{p[0].first, p[0].second, 0.0};
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (in_circle(c, p[i].first, p[i].second)) continue;
        c = Circle{p[i].first, p[i].second, 0.0};
        for (std::size_t j = 0; j < i; ++j) {
            if (in_circle(c, p[j].first, p[j].second)) continue;
            c = circle_two(p[i].first, p[i].second, p[j].first, p[j].second);
            for (std::size_t k = 0; k < j; ++k) {
                if (in_circle(c, p[k].first, p[k].second)) continue;
                c = circumcircle(p[i].first, p[i].second, p[j].first,
                                 p[j].second, p[k].first, p[k].second);
            }
        }
    }
    return c;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 1-D lower envelope of parabolas (squared distance transform).
void edt_1d(const std::vector<double>& f, std::vector<double>& d, int n,
            std::vector<int>& v, std::vector<double>& z) {
    int k = 0;
    v[0] = 0;
    z[0] = -kInf;
    z[1] = kInf;
    for (int q = 1; q < n; ++q) {
        if (f[q] == kInf) continue;
        if (f[v[0]] == kInf) {  // no finite site yet
            v[0] = q;
            continue;
        }
        double s = ((f[q] + q * q) - (f[v[k]] + v[k] * v[k])) /
                   (2.0 * q - 2.0 * v[k]);
        while (k > 0 && s <= z[k]) {
            --k;
            s = ((f[q] + q * q) - (f[v[k]] + v[k] * v[k])) /
                (2.0 * q - 2.0 * v[k]);
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = kInf;
    }
    k = 0;
    for (int q = 0; q < n; ++q) {
        if (f[v[0]] == kInf) {
            d[q] = kInf;
            continue;
        }
        while (z[k + 1] < q) ++k;
        const double dq = q - v[k];
        d[q] = dq * dq + f[v[k]];
    }
}

// Exact squared Euclidean distance to the nearest feature pixel.
std::vector<double> squared_distance_transform(const BinaryMask& feature) {
    const int w = feature.width;
    const int h = feature.height;
    std::vector<double> dist(static_cast<std::size_t>(w) * h);
    for (std::size_t i = 0; i < dist.size(); ++i) {
        dist[i] = feature.data[i] ? 0.0 : kInf;
    }

    const int n_max = std::max(w, h);
    std::vector<double> f(n_max), d(n_max);
    std::vector<int> v(n_max);
    std::vector<double> z(n_max + 1);

    // Columns, then rows.
    for (int x = 0; x < w; ++x) {
        for (int y = 0; y < h; ++y) f[y] = dist[static_cast<std::size_t>(y) * w + x];
        edt_1d(f, d, h, v, z);
        for (int y = 0; y < h; ++y) dist[static_cast<std::size_t>(y) * w + x] = d[y];
    }
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) f[x] = dist[static_cast<std::size_t>(y) * w + x];
        edt_1d(f, d, w, v, z);
        for (int x = 0; x < w; ++x) dist[static_cast<std::size_t>(y) * w + x] = d[x];
    }
    return dist;
}

}  // namespace

BinaryMask erode_disc(const BinaryMask& mask, double radius) {
    if (radius <= 0.0) return mask;
    BinaryMask background = mask;
    for (auto& v : background.data) v = v ? 0 : 1;
    const std::vector<double> dist = squared_distance_transform(background);
    BinaryMask out = BinaryMask::zeros(mask.width, mask.height);
    const double r2 = radius * radius;
    for (std::size_t i = 0; i < out.data.size(); ++i) {
        out.data[i] = mask.data[i] && dist[i] > r2;
    }
    return out;
}

BinaryMask dilate_disc(const BinaryMask& mask, double radius) {
    if (radius <= 0.0) return mask;
    const std::vector<double> dist = squared_distance_transform(mask);
    BinaryMask out = BinaryMask::zeros(mask.width, mask.height);
    const double r2 = radius * radius;
    for (std::size_t i = 0; i < out.data.size(); ++i) {
        out.data[i] = mask.data[i] || dist[i] <= r2;
    }
    return out;
}

BinaryMask plate_roi(const RasterImage& image) {
    const BinaryMask bright =
        threshold(to_grayscale(image), 200, ThresholdMode::kAbove);
    const Labeling labeling = connected_components(bright);
    const std::int32_t label = labeling.largest();
    if (label < 0) {
        throw RoiError("plate_roi: no bright component found");
    }
    const std::vector<PixelCoord> contour = boundary_contour(labeling, label);
    std::vector<std::pair<double, double>> pts;
    pts.reserve(contour.size());
    for (const PixelCoord& p : contour) {
        pts.emplace_back(static_cast<double>(p.x), static_cast<double>(p.y));
    }
    const Circle rim = min_enclosing_circle(pts);
    const double r = rim.radius - 30.0;
    if (r <= 0.0) {
        throw RoiError("plate_roi: rim too small after 30 px padding");
    }
    BinaryMask roi = BinaryMask::zeros(image.width, image.height);
    const double r2 = r * r;
    for (int y = 0; y < image.height; ++y) {
        for (int x = 0; x < image.width; ++x) {
            const double dx = x - rim.cx;
            const double dy = y - rim.cy;
            if (dx * dx + dy * dy <= r2) roi.set(x, y, true);
        }
    }
    return roi;
}

BinaryMask seat_roi(const RasterImage& image) {
    const BinaryMask bright =
        threshold(to_grayscale(image), 200, ThresholdMode::kAbove);
    const Labeling labeling = connected_components(bright);
    const std::int32_t label = labeling.largest();
    if (label < 0) {
        throw RoiError("seat_roi: no bright component found");
    }

    // Complement components that do not touch the border are holes of the
    // seat body; the largest one is the opening.
    BinaryMask body = BinaryMask::zeros(image.width, image.height);
    for (std::size_t i = 0; i < body.data.size(); ++i) {
        body.data[i] = labeling.labels[i] == label;
    }
    BinaryMask complement = body;
    for (auto& v : complement.data) v = v ? 0 : 1;
    const Labeling holes = connected_components(complement);

    std::vector<bool> touches_border(holes.areas.size(), false);
    auto mark = [&](int x, int y) {
        const std::int32_t l = holes.at(x, y);
        if (l >= 0) touches_border[l] = true;
    };
    for (int x = 0; x < image.width; ++x) {
        mark(x, 0);
        mark(x, image.height - 1);
    }
    for (int y = 0; y < image.height; ++y) {
        mark(0, y);
        mark(image.width - 1, y);
    }

    std::int32_t hole_label = -1;
    long hole_area = 0;
    for (std::size_t l = 0; l < holes.areas.size(); ++l) {
        if (!touches_border[l] && holes.areas[l] > hole_area) {
            hole_area = holes.areas[l];
            hole_label = static_cast<std::int32_t>(l);
        }
    }
    if (hole_label < 0) {
        throw RoiError("seat_roi: no enclosed opening found (solid shape)");
    }

    // Filled outer region = body plus all of its holes.
    BinaryMask outer = body;
    for (std::size_t i = 0; i < outer.data.size(); ++i) {
        const std::int32_t l = holes.labels[i];
        if (l >= 0 && !touches_border[l]) outer.data[i] = 1;
    }
    BinaryMask hole = BinaryMask::zeros(image.width, image.height);
    for (std::size_t i = 0; i < hole.data.size(); ++i) {
        hole.data[i] = holes.labels[i] == hole_label;
    }

    const BinaryMask outer_shrunk = erode_disc(outer, 30.0);
    const BinaryMask hole_grown = dilate_disc(hole, 20.0);
    BinaryMask roi = BinaryMask::zeros(image.width, image.height);
    for (std::size_t i = 0; i < roi.data.size(); ++i) {
        roi.data[i] = outer_shrunk.data[i] && !hole_grown.data[i];
    }
    return roi;
}

SegmentResult segment_red(const RasterImage& image, const BinaryMask& roi) {
    if (roi.width != image.width || roi.height != image.height) {
        throw std::domain_error("segment_red: ROI size mismatch");
    }
    SegmentResult out;
    out.mask = BinaryMask::zeros(image.width, image.height);
    for (int y = 0; y < image.height; ++y) {
        for (int x = 0; x < image.width; ++x) {
            if (!roi.at(x, y)) continue;
            const int r = image.r(x, y);
            if (r > 25 && r > image.g(x, y) && r > image.b(x, y)) {
                out.mask.set(x, y, true);
                ++out.count;
            }
        }
    }
    return out;
}

SegmentResult segment_dark(const RasterImage& image, const BinaryMask& roi,
                           int t) {
    if (roi.width != image.width || roi.height != image.height) {
        throw std::domain_error("segment_dark: ROI size mismatch");
    }
    const GrayImage gray = to_grayscale(image);
    SegmentResult out;
    out.mask = BinaryMask::zeros(image.width, image.height);
    for (int y = 0; y < image.height; ++y) {
        for (int x = 0; x < image.width; ++x) {
            if (roi.at(x, y) && gray.at(x, y) < t) {
                out.mask.set(x, y, true);
                ++out.count;
            }
        }
    }
    return out;
}

double cleaned_percent(long before_px, long after_px) {
    if (before_px <= 0) {
        throw std::domain_error(
            "cleaned_percent: undefined for zero contamination before");
    }
    return 100.0 * static_cast<double>(before_px - after_px) /
           static_cast<double>(before_px);
}

}  // namespace scrub
