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

#include <string>

#include "scrub/errors.hpp"

// Quasi-static load bookkeeping for a hanging arm pressing straight down on
// a planar surface. Vertical force balance gives the internal tendon
// tension F_t = F_g - F_n; no lateral loads exist in this regime.

namespace scrub {

/// Tension band covered by the training corpus (endpoints inclusive).
struct OperatingRange {
    double f_g_min = 6.2;   // N
    double f_g_max = 15.3;  // N
};

/// Vertical force balance at the end effector.
struct LoadState {
    double f_gravity = 0.0;  // N, carried weight
    double f_normal = 0.0;   // N, commanded surface contact force
    double f_tendon = 0.0;   // N, derived, = f_gravity - f_normal
};

/// Net internal tendon tension for a carried weight pressing with f_normal.
/// Throws InfeasibleLoadError when the commanded force exceeds the carried
/// weight (the arm cannot push harder than it weighs quasi-statically).
inline double tendon_tension(double f_gravity, double f_normal) {
    if (!(f_gravity > 0.0)) {
        throw InfeasibleLoadError("tendon_tension: f_gravity must be > 0");
    }
    if (f_normal < 0.0) {
        throw InfeasibleLoadError("tendon_tension: f_normal must be >= 0");
    }
    if (f_normal > f_gravity) {
        throw InfeasibleLoadError(
            "tendon_tension: commanded normal force exceeds carried weight");
    }
    return f_gravity - f_normal;
}

inline LoadState make_load_state(double f_gravity, double f_normal) {
    return {f_gravity, f_normal, tendon_tension(f_gravity, f_normal)};
}

struct DistributionCheck {
    bool in_distribution = false;
    std::string note;
};

/// True iff the tension sits inside the trained band, endpoints included.
/// Diagnostic only; never throws.
inline DistributionCheck check_in_distribution(double f_tendon,
                                               const OperatingRange& range = {}) {
    DistributionCheck out;
    out.in_distribution =
        f_tendon >= range.f_g_min && f_tendon <= range.f_g_max;
    if (!out.in_distribution) {
        out.note = "tension " + std::to_string(f_tendon) +
                   " N outside trained band [" + std::to_string(range.f_g_min) +
                   ", " + std::to_string(range.f_g_max) + "] N";
    }
    return out;
}

/// Largest commandable contact force that keeps the tension in band.
inline double max_commandable_force(double f_gravity,
                                    const OperatingRange& range = {}) {
    return f_gravity - range.f_g_min;
}

}  // namespace scrub
