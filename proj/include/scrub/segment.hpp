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
#include <span>
#include <utility>
#include <vector>

#include "scrub/image.hpp"

// Contamination quantification: region-of-interest extraction for plate
// and seat images, channel-rule segmentation inside the ROI, and the
// cleaned-percentage metric over before/after pixel counts.

namespace scrub {

/// Connected-component labeling (8-connectivity). label -1 = background.
struct Labeling {
    int width = 0;
    int height = 0;
    std::vector<std::int32_t> labels;
    std::vector<long> areas;  // indexed by label

    std::int32_t at(int x, int y) const { return labels[y * width + x]; }
    /// Label of the largest component, or -1 when there is none.
    std::int32_t largest() const;
};

Labeling connected_components(const BinaryMask& mask);

struct PixelCoord {
    int x = 0;
    int y = 0;
    bool operator==(const PixelCoord&) const = default;
};

/// Ordered boundary of one labeled component (Moore neighbor tracing,
/// clockwise). A single-pixel component yields a one-entry contour.
std::vector<PixelCoord> boundary_contour(const Labeling& labeling,
                                         std::int32_t label);

struct Circle {
    double cx = 0.0;
    double cy = 0.0;
    double radius = 0.0;
};

/// Smallest circle containing all points: randomized incremental
/// construction with a seeded shuffle, so the result is reproducible and
/// independent of input order.
Circle min_enclosing_circle(std::span<const std::pair<double, double>> points,
                            std::uint64_t seed = 0x5eed);

/// Morphology with an exact Euclidean disc: erosion keeps pixels strictly
/// farther than `radius` from the background, dilation adds pixels within
/// `radius` of the mask.
BinaryMask erode_disc(const BinaryMask& mask, double radius);
BinaryMask dilate_disc(const BinaryMask& mask, double radius);

/// Plate region of interest: bright pixels (> 200), largest component,
/// minimal enclosing circle of its boundary, disc shrunk radially by
/// 30 px to drop the rim glow. Throws RoiError when no component is found
/// or the shrink consumes the disc.
BinaryMask plate_roi(const RasterImage& image);

/// Seat region of interest: bright pixels (> 200), largest component with
/// its filled outline as the outer region and its largest enclosed hole as
/// the opening; the outer region is eroded by 30 px and the hole dilated
/// by 20 px to drop shadows. Throws RoiError without both boundaries.
BinaryMask seat_roi(const RasterImage& image);

struct SegmentResult {
    long count = 0;
    BinaryMask mask;
};

/// Red-residue rule inside the ROI: R > 25 and R > G and R > B (strict).
SegmentResult segment_red(const RasterImage& image, const BinaryMask& roi);

/// Dark-residue rule inside the ROI: gray intensity strictly below t.
SegmentResult segment_dark(const RasterImage& image, const BinaryMask& roi,
                           int t = 150);

/// 100 * (before - after) / before. Negative when contamination grew;
/// callers should warn rather than fail on that. Throws std::domain_error
/// when before is zero (the metric is undefined).
double cleaned_percent(long before_px, long after_px);

}  // namespace scrub
