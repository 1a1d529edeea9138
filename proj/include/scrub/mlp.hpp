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
#include <cstdint>
#include <string>
#include <vector>

#include "scrub/dataset.hpp"
#include "scrub/pose.hpp"

// Learned inverse mapping from (pose, tendon tension) to the nine tendon
// lengths: a fully connected net with two ReLU hidden layers, trained with
// Adam on z-scored inputs and targets. Everything is seed-deterministic:
// the same corpus and config reproduce the same weights bit for bit.

namespace scrub {

/// Weight matrices and biases of the 8 -> h -> h -> 9 network. The struct
/// doubles as a same-shaped container for gradients and Adam moments.
struct MLPParams {
    Eigen::MatrixXd w1, w2, w3;
    Eigen::VectorXd b1, b2, b3;

    static MLPParams zeros_like(const MLPParams& other);
    bool all_finite() const;
    int hidden() const { return static_cast<int>(w1.rows()); }
};

using Gradients = MLPParams;

/// Per-feature z-score statistics; constant features keep std = 1.
struct Normalization {
    Eigen::Matrix<double, 8, 1> in_mean = Eigen::Matrix<double, 8, 1>::Zero();
    Eigen::Matrix<double, 8, 1> in_std = Eigen::Matrix<double, 8, 1>::Ones();
    Eigen::Matrix<double, 9, 1> out_mean = Eigen::Matrix<double, 9, 1>::Zero();
    Eigen::Matrix<double, 9, 1> out_std = Eigen::Matrix<double, 9, 1>::Ones();
};

struct Model {
    MLPParams params;
    Normalization norm;
};

struct TrainConfig {
    int hidden_width = 128;       // 1600 reproduces the reference setup
    double learning_rate = 0.001;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    int batch_size = 16;
    int epochs = 50;
    double lr_decay_gamma = 0.9;  // lr multiplier applied per epoch
    std::uint64_t seed = 0;

    void validate() const;
};

struct AdamState {
    Gradients m, v;
    long step = 0;

    static AdamState zeros_like(const MLPParams& params);
};

struct EpochStats {
    double train_loss = 0.0;
    double val_loss = 0.0;
    double learning_rate = 0.0;
};

struct TrainResult {
    Model model;
    std::vector<EpochStats> history;
};

/// Flattens (pose, tension) into the raw 8-vector, normalizing the
/// quaternion and fixing its sign on ingest.
Eigen::Matrix<double, 8, 1> make_input(const Pose& pose, double f_tendon);

/// Inference: raw 8-vector in, de-normalized 9-vector of tendon lengths
/// out. Throws std::domain_error on non-finite input.
Eigen::Matrix<double, 9, 1> forward(const Model& model,
                                    const Eigen::Matrix<double, 8, 1>& input);

TendonConfig predict_tendons(const Model& model, const Pose& pose,
                             double f_tendon);

/// Forward pass in normalized space on a batch (inputs as columns).
Eigen::MatrixXd forward_normalized(const MLPParams& params,
                                   const Eigen::MatrixXd& inputs);

/// Mean of squared componentwise differences.
double loss_mse(const Eigen::MatrixXd& pred, const Eigen::MatrixXd& target);

/// Exact gradients of the batch-mean MSE in normalized space.
Gradients gradient(const MLPParams& params, const Eigen::MatrixXd& inputs,
                   const Eigen::MatrixXd& targets);

/// One Adam update with bias correction at the given step (1-based) and
/// learning rate.
void adam_step(MLPParams& params, const Gradients& grads, AdamState& state,
               double learning_rate, const TrainConfig& cfg);

/// Learning rate schedule: base * gamma^epoch (epoch 0-based).
double learning_rate_at(const TrainConfig& cfg, int epoch);

/// Seeded uniform initialization in +-sqrt(6/(fan_in+fan_out)) per layer.
MLPParams init_params(int hidden_width, std::uint64_t seed);

/// Full training loop. Normalization statistics come from the training
/// split alone. Throws DivergenceError (naming the epoch) when the loss
/// leaves the finite range.
TrainResult train(const Dataset& train_set, const Dataset& val_set,
                  const TrainConfig& cfg);

/// Text round-trip of weights and normalization at full precision.
void save_model(const Model& model, const std::string& path);
Model load_model(const std::string& path);

}  // namespace scrub
