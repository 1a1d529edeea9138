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

#include "scrub/linfit.hpp"

#include <cmath>
#include <cstddef>

#include "scrub/errors.hpp"

namespace scrub {

LinearFit fit_linear(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw DegenerateFitError("fit_linear: x/y size mismatch");
    }
    const std::size_t n = x.size();
    if (n < 2) {
        throw DegenerateFitError("fit_linear: need at least two points");
    }

    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);

    // Centered sums keep the normal equations well conditioned.
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mean_x;
        sxx += dx * dx;
        sxy += dx * (y[i] - mean_y);
    }
    if (sxx == 0.0) {
        throw DegenerateFitError("fit_linear: all x values identical");
    }

    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;

    double ss_res = 0.0;
    double ss_tot = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (fit.slope * x[i] + fit.intercept);
        const double d = y[i] - mean_y;
        ss_res += r * r;
        ss_tot += d * d;
    }
    if (ss_tot == 0.0) {
        fit.r_squared = (ss_res == 0.0) ? 1.0 : 0.0;
    } else {
        fit.r_squared = 1.0 - ss_res / ss_tot;
    }
    return fit;
}

LinearFit fit_linear(std::span<const std::pair<double, double>> points) {
    std::vector<double> x(points.size());
    std::vector<double> y(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        x[i] = points[i].first;
        y[i] = points[i].second;
    }
    return fit_linear(x, y);
}

}  // namespace scrub
