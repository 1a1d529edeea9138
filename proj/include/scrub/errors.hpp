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

#include <stdexcept>
#include <string>

namespace scrub {

// Base class for all library errors that are not plain math-domain
// violations (those throw std::domain_error).
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Commanded normal force exceeds the carried weight in the quasi-static
// regime, or a load precondition is violated.
struct InfeasibleLoadError : Error {
    using Error::Error;
};

// Least-squares fit on data with no spread in the regressor.
struct DegenerateFitError : Error {
    using Error::Error;
};

// Arc parameters map to a tendon length outside the physical envelope.
struct EnvelopeError : Error {
    using Error::Error;
};

// Tendon configuration is not on the reachable constant-curvature manifold.
struct ManifoldError : Error {
    using Error::Error;
};

// Path offset exceeds the local curvature radius of the centerline.
struct DegenerateOffsetError : Error {
    using Error::Error;
};

// Malformed text input; message carries the offending line where known.
struct ParseError : Error {
    using Error::Error;
};

// Unsupported or malformed binary image format.
struct FormatError : Error {
    using Error::Error;
};

// Region-of-interest extraction failed (no usable component found).
struct RoiError : Error {
    using Error::Error;
};

// Iterative solver failed to converge.
struct NumericError : Error {
    using Error::Error;
};

// Training produced a non-finite loss.
struct DivergenceError : Error {
    using Error::Error;
};

}  // namespace scrub
