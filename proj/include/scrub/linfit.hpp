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

#include <span>
#include <utility>
#include <vector>

namespace scrub {

/// Ordinary least-squares line fit y = slope*x + intercept.
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Fits a line by ordinary least squares and reports R^2 = 1 - SS_res/SS_tot.
/// A zero-variance target is scored R^2 = 1 when the residuals are zero and
/// 0 otherwise. Throws DegenerateFitError when fewer than two points are
/// given or all abscissae coincide.
LinearFit fit_linear(std::span<const double> x, std::span<const double> y);

LinearFit fit_linear(std::span<const std::pair<double, double>> points);

}  // namespace scrub
