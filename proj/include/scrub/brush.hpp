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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "scrub/errors.hpp"

// Friction moments of spinning brushes pressed on a surface under uniform
// pressure. A dense bristle bed is treated as a continuous contact disc;
// translational speed is assumed negligible next to the spin, so friction
// reduces to a net moment about the brush axis. All lengths in mm, forces
// in N, pressures in N/mm^2, moments in N*mm.

namespace scrub {

/// Geometry and operating point of a brush. r_inner = 0 describes a plain
/// unidirectional brush; r_inner > 0 a counter-rotating pair (inner disc
/// plus outer annulus spinning the opposite way).
struct BrushSpec {
    double mu = 0.93;        // dynamic friction coefficient
    double r_outer = 35.0;   // mm
    double r_inner = 25.0;   // mm, 0 for unidirectional
    double omega_rpm = 110.0;

    void validate() const {
        if (!(mu > 0.0)) throw std::domain_error("BrushSpec: mu must be > 0");
        if (!(r_inner >= 0.0 && r_inner < r_outer)) {
            throw std::domain_error("BrushSpec: need 0 <= r_inner < r_outer");
        }
        if (!(omega_rpm > 0.0)) {
            throw std::domain_error("BrushSpec: omega_rpm must be > 0");
        }
    }
};

/// Measured force-moment line M = k*F - delta for a geared brush whose
/// faces engage only after the gear play is taken up.
struct BacklashFit {
    double k = 9.34;        // N*mm per N
    double delta = 52.4;    // N*mm
    double r_squared = 1.0;

    void validate() const {
        if (!(k > 0.0)) throw std::domain_error("BacklashFit: k must be > 0");
        if (!(delta >= 0.0)) throw std::domain_error("BacklashFit: delta must be >= 0");
        if (!(r_squared >= 0.0 && r_squared <= 1.0)) {
            throw std::domain_error("BacklashFit: r_squared outside [0,1]");
        }
    }
};

/// Net friction moment of a solid disc brush of radius r spinning under
/// uniform pressure: 2*pi*mu*P*r^3/3.
template <typename Scalar>
Scalar moment_unidirectional(Scalar mu, Scalar pressure, Scalar radius) {
    if (mu < Scalar(0) || pressure < Scalar(0) || radius < Scalar(0)) {
        throw std::domain_error("moment_unidirectional: negative input");
    }
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    return Scalar(2) * pi * mu * pressure * radius * radius * radius / Scalar(3);
}

/// Net moment of a counter-rotating pair (outer annulus minus inner disc):
/// (2*pi*mu*P/3) * (r_outer^3 - 2*r_inner^3). Negative when the inner face
/// dominates.
template <typename Scalar>
Scalar moment_counter_rotating(Scalar mu, Scalar pressure, Scalar r_inner,
                               Scalar r_outer) {
    if (mu < Scalar(0) || pressure < Scalar(0) || r_inner < Scalar(0)) {
        throw std::domain_error("moment_counter_rotating: negative input");
    }
    if (r_inner > r_outer) {
        throw std::domain_error("moment_counter_rotating: r_inner > r_outer");
    }
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    const Scalar cubes =
        r_outer * r_outer * r_outer - Scalar(2) * r_inner * r_inner * r_inner;
    return Scalar(2) * pi * mu * pressure * cubes / Scalar(3);
}

/// Inner/outer radius ratio that cancels the two face moments: 2^(-1/3).
inline double zero_moment_ratio() { return 1.0 / std::cbrt(2.0); }

/// Per-newton slope of the counter-rotating moment in the two-face linear
/// form, (2/3)*mu*|r_outer - 2*r_inner|. Reported as a magnitude. Note this
/// linearized slope disagrees with the per-force slope of the integrated
/// annulus-minus-disc moment for general radii; both are exposed on purpose.
template <typename Scalar>
Scalar paper_slope_counter(Scalar mu, Scalar r_inner, Scalar r_outer) {
    if (mu < Scalar(0) || r_inner < Scalar(0) || r_inner > r_outer) {
        throw std::domain_error("paper_slope_counter: invalid radii");
    }
    using std::abs;
    return Scalar(2) / Scalar(3) * mu * abs(r_outer - Scalar(2) * r_inner);
}

/// Moment under the backlash model, clamped at zero below the engagement
/// threshold F = delta/k where the faces have not yet taken up the play.
inline double backlash_moment(const BacklashFit& fit, double force) {
    fit.validate();
    if (force < 0.0) throw std::domain_error("backlash_moment: negative force");
    const double m = fit.k * force - fit.delta;
    return m > 0.0 ? m : 0.0;
}

/// Friction coefficient recovered from a measured moment-per-force slope of
/// a solid disc brush: mu = 3*slope/(2*r).
inline double extract_mu_from_slope(double slope, double radius) {
    if (!(slope > 0.0) || !(radius > 0.0)) {
        throw std::domain_error("extract_mu_from_slope: slope and r must be > 0");
    }
    return 3.0 * slope / (2.0 * radius);
}

/// Per-newton moment of a solid disc brush when the total normal force F is
/// spread as uniform pressure over the full disc: M/F = (2/3)*mu*r.
inline double disc_slope_per_force(double mu, double radius) {
    return moment_unidirectional(mu, 1.0 / (std::numbers::pi * radius * radius),
                                 radius);
}

/// Per-newton moment of the counter-rotating pair with the force spread
/// over the full outer disc: M/F = (2*mu/3)*(r_o^3 - 2*r_i^3)/r_o^2. Signed.
inline double counter_slope_per_force(double mu, double r_inner, double r_outer) {
    return moment_counter_rotating(
        mu, 1.0 / (std::numbers::pi * r_outer * r_outer), r_inner, r_outer);
}

}  // namespace scrub
