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

#include <Eigen/Dense>
#include <Eigen/Geometry>

namespace scrub {

/// End-effector pose: position in mm plus a unit quaternion held with
/// canonical sign (w >= 0) so the double cover never leaks into data.
struct Pose {
    Eigen::Vector3d position = Eigen::Vector3d::Zero();
    Eigen::Quaterniond orientation = Eigen::Quaterniond::Identity();

    void canonicalize() {
        orientation.normalize();
        if (orientation.w() < 0.0 ||
            (orientation.w() == 0.0 && orientation.x() < 0.0)) {
            orientation.coeffs() = -orientation.coeffs();
        }
    }

    /// Pose as the flat 7-vector [x, y, z, qw, qx, qy, qz].
    Eigen::Matrix<double, 7, 1> as_vector() const {
        Eigen::Matrix<double, 7, 1> v;
        v << position.x(), position.y(), position.z(), orientation.w(),
            orientation.x(), orientation.y(), orientation.z();
        return v;
    }

    static Pose from_vector(const Eigen::Matrix<double, 7, 1>& v) {
        Pose p;
        p.position = v.head<3>();
        p.orientation = Eigen::Quaterniond(v[3], v[4], v[5], v[6]);
        p.canonicalize();
        return p;
    }
};

}  // namespace scrub
