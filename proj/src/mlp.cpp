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

#include "scrub/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "scrub/errors.hpp"

namespace scrub {

namespace {

Eigen::MatrixXd relu(const Eigen::MatrixXd& z) { return z.cwiseMax(0.0); }

void check_shapes(const MLPParams& p) {
    const auto h = p.w1.rows();
    if (p.w1.cols() != 8 || p.w2.rows() != h || p.w2.cols() != h ||
        p.w3.rows() != 9 || p.w3.cols() != h || p.b1.size() != h ||
        p.b2.size() != h || p.b3.size() != 9) {
        throw std::domain_error("MLPParams: inconsistent layer shapes");
    }
}

}  // namespace

MLPParams MLPParams::zeros_like(const MLPParams& other) {
    MLPParams p;
    p.w1 = Eigen::MatrixXd::Zero(other.w1.rows(), other.w1.cols());
    p.w2 = Eigen::MatrixXd::Zero(other.w2.rows(), other.w2.cols());
    p.w3 = Eigen::MatrixXd::Zero(other.w3.rows(), other.w3.cols());
    p.b1 = Eigen::VectorXd::Zero(other.b1.size());
    p.b2 = Eigen::VectorXd::Zero(other.b2.size());
    p.b3 = Eigen::VectorXd::Zero(other.b3.size());
    return p;
}

bool MLPParams::all_finite() const {
    return w1.allFinite() && w2.allFinite() && w3.allFinite() &&
           b1.allFinite() && b2.allFinite() && b3.allFinite();
}

void TrainConfig::validate() const {
    if (hidden_width <= 0 || batch_size <= 0 || epochs <= 0 ||
        !(learning_rate > 0.0) || !(beta1 > 0.0 && beta1 < 1.0) ||
        !(beta2 > 0.0 && beta2 < 1.0) || !(epsilon > 0.0) ||
        !(lr_decay_gamma > 0.0 && lr_decay_gamma <= 1.0)) {
        throw std::domain_error("TrainConfig: hyperparameters out of range");
    }
}

AdamState AdamState::zeros_like(const MLPParams& params) {
    AdamState s;
    s.m = MLPParams::zeros_like(params);
    s.v = MLPParams::zeros_like(params);
    s.step = 0;
    return s;
}

Eigen::Matrix<double, 8, 1> make_input(const Pose& pose, double f_tendon) {
    Pose p = pose;
    p.canonicalize();
    Eigen::Matrix<double, 8, 1> x;
    x << p.position.x(), p.position.y(), p.position.z(), p.orientation.w(),
        p.orientation.x(), p.orientation.y(), p.orientation.z(), f_tendon;
    return x;
}

Eigen::MatrixXd forward_normalized(const MLPParams& params,
                                   const Eigen::MatrixXd& inputs) {
    check_shapes(params);
    const Eigen::MatrixXd a1 =
        relu((params.w1 * inputs).colwise() + params.b1);
    const Eigen::MatrixXd a2 = relu((params.w2 * a1).colwise() + params.b2);
    return (params.w3 * a2).colwise() + params.b3;
}

Eigen::Matrix<double, 9, 1> forward(const Model& model,
                                    const Eigen::Matrix<double, 8, 1>& input) {
    if (!input.allFinite()) {
        throw std::domain_error("forward: non-finite input");
    }
    const Eigen::Matrix<double, 8, 1> normalized =
        (input - model.norm.in_mean).cwiseQuotient(model.norm.in_std);
    const Eigen::MatrixXd y = forward_normalized(model.params, normalized);
    return model.norm.out_mean + model.norm.out_std.cwiseProduct(y.col(0));
}

TendonConfig predict_tendons(const Model& model, const Pose& pose,
                             double f_tendon) {
    TendonConfig q;
    q.lengths = forward(model, make_input(pose, f_tendon));
    return q;
}

double loss_mse(const Eigen::MatrixXd& pred, const Eigen::MatrixXd& target) {
    if (pred.rows() != target.rows() || pred.cols() != target.cols()) {
        throw std::domain_error("loss_mse: shape mismatch");
    }
    return (pred - target).squaredNorm() /
           static_cast<double>(pred.size());
}

Gradients gradient(const MLPParams& params, const Eigen::MatrixXd& inputs,
                   const Eigen::MatrixXd& targets) {
    check_shapes(params);
    if (inputs.cols() == 0) {
        throw std::domain_error("gradient: empty batch");
    }
    const Eigen::MatrixXd z1 = (params.w1 * inputs).colwise() + params.b1;
    const Eigen::MatrixXd a1 = relu(z1);
    const Eigen::MatrixXd z2 = (params.w2 * a1).colwise() + params.b2;
    const Eigen::MatrixXd a2 = relu(z2);
    const Eigen::MatrixXd y = (params.w3 * a2).colwise() + params.b3;

    // d(mean squared error)/dy over all size() entries.
    const Eigen::MatrixXd dy =
        2.0 * (y - targets) / static_cast<double>(y.size());

    Gradients g;
    g.w3 = dy * a2.transpose();
    g.b3 = dy.rowwise().sum();
    Eigen::MatrixXd da2 = params.w3.transpose() * dy;
    da2 = (z2.array() > 0.0).select(da2, 0.0);
    g.w2 = da2 * a1.transpose();
    g.b2 = da2.rowwise().sum();
    Eigen::MatrixXd da1 = params.w2.transpose() * da2;
    da1 = (z1.array() > 0.0).select(da1, 0.0);
    g.w1 = da1 * inputs.transpose();
    g.b1 = da1.rowwise().sum();
    return g;
}

void adam_step(MLPParams& params, const Gradients& grads, AdamState& state,
               double learning_rate, const TrainConfig& cfg) {
    ++state.step;
    const double b1 = cfg.beta1;
    const double b2 = cfg.beta2;
    const double corr1 = 1.0 - std::pow(b1, static_cast<double>(state.step));
    const double corr2 = 1.0 - std::pow(b2, static_cast<double>(state.step));

    auto update = [&](auto& p, const auto& g, auto& m, auto& v) {
        m = b1 * m + (1.0 - b1) * g;
        v = b2 * v + (1.0 - b2) * g.cwiseProduct(g);
        p -= (learning_rate * (m.array() / corr1) /
              ((v.array() / corr2).sqrt() + cfg.epsilon))
                 .matrix();
    };

    update(params.w1, grads.w1, state.m.w1, state.v.w1);
    update(params.w2, grads.w2, state.m.w2, state.v.w2);
    update(params.w3, grads.w3, state.m.w3, state.v.w3);
    update(params.b1, grads.b1, state.m.b1, state.v.b1);
    update(params.b2, grads.b2, state.m.b2, state.v.b2);
    update(params.b3, grads.b3, state.m.b3, state.v.b3);
}

double learning_rate_at(const TrainConfig& cfg, int epoch) {
    return cfg.learning_rate * std::pow(cfg.lr_decay_gamma, epoch);
}

MLPParams init_params(int hidden_width, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform_layer = [&](Eigen::Index rows, Eigen::Index cols) {
        const double bound =
            std::sqrt(6.0 / static_cast<double>(rows + cols));
        std::uniform_real_distribution<double> dist(-bound, bound);
        Eigen::MatrixXd w(rows, cols);
        for (Eigen::Index i = 0; i < rows; ++i) {
            for (Eigen::Index j = 0; j < cols; ++j) {
                w(i, j) = dist(rng);
            }
        }
        return w;
    };
    MLPParams p;
    p.w1 = uniform_layer(hidden_width, 8);
    p.w2 = uniform_layer(hidden_width, hidden_width);
    p.w3 = uniform_layer(9, hidden_width);
    p.b1 = Eigen::VectorXd::Zero(hidden_width);
    p.b2 = Eigen::VectorXd::Zero(hidden_width);
    p.b3 = Eigen::VectorXd::Zero(9);
    return p;
}

namespace {

Normalization fit_normalization(const Eigen::MatrixXd& inputs,
                                const Eigen::MatrixXd& targets) {
    Normalization n;
    const double count = static_cast<double>(inputs.cols());
    n.in_mean = inputs.rowwise().mean();
    n.out_mean = targets.rowwise().mean();
    for (int i = 0; i < 8; ++i) {
        const double var =
            (inputs.row(i).array() - n.in_mean[i]).square().sum() / count;
        const double sd = std::sqrt(var);
        n.in_std[i] = sd > 1e-12 ? sd : 1.0;
    }
    for (int i = 0; i < 9; ++i) {
        const double var =
            (targets.row(i).array() - n.out_mean[i]).square().sum() / count;
        const double sd = std::sqrt(var);
        n.out_std[i] = sd > 1e-12 ? sd : 1.0;
    }
    return n;
}

void to_matrices(const Dataset& ds, Eigen::MatrixXd& inputs,
                 Eigen::MatrixXd& targets) {
    inputs.resize(8, static_cast<Eigen::Index>(ds.size()));
    targets.resize(9, static_cast<Eigen::Index>(ds.size()));
    for (std::size_t i = 0; i < ds.size(); ++i) {
        inputs.col(static_cast<Eigen::Index>(i)) =
            make_input(ds.samples[i].pose, ds.samples[i].f_tendon);
        targets.col(static_cast<Eigen::Index>(i)) = ds.samples[i].q.lengths;
    }
}

}  // namespace

TrainResult train(const Dataset& train_set, const Dataset& val_set,
                  const TrainConfig& cfg) {
    cfg.validate();
    if (train_set.size() == 0) {
        throw std::domain_error("train: empty training set");
    }

    Eigen::MatrixXd x_train, t_train, x_val, t_val;
    to_matrices(train_set, x_train, t_train);
    to_matrices(val_set, x_val, t_val);

    TrainResult result;
    result.model.norm = fit_normalization(x_train, t_train);
    const Normalization& norm = result.model.norm;

    auto normalize = [&](Eigen::MatrixXd& x, Eigen::MatrixXd& t) {
        x = (x.colwise() - norm.in_mean).array().colwise() /
            norm.in_std.array();
        t = (t.colwise() - norm.out_mean).array().colwise() /
            norm.out_std.array();
    };
    normalize(x_train, t_train);
    if (x_val.cols() > 0) normalize(x_val, t_val);

    MLPParams params = init_params(cfg.hidden_width, cfg.seed);
    AdamState adam = AdamState::zeros_like(params);

    std::mt19937_64 shuffle_rng(cfg.seed + 1);
    std::vector<Eigen::Index> order(x_train.cols());
    std::iota(order.begin(), order.end(), 0);

    const Eigen::Index n = x_train.cols();
    Eigen::MatrixXd bx(8, cfg.batch_size), bt(9, cfg.batch_size);

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        const double lr = learning_rate_at(cfg, epoch);
        std::shuffle(order.begin(), order.end(), shuffle_rng);

        double loss_sum = 0.0;
        long batches = 0;
        for (Eigen::Index begin = 0; begin < n; begin += cfg.batch_size) {
            const Eigen::Index size =
                std::min<Eigen::Index>(cfg.batch_size, n - begin);
            bx.resize(8, size);
            bt.resize(9, size);
            for (Eigen::Index i = 0; i < size; ++i) {
                bx.col(i) = x_train.col(order[begin + i]);
                bt.col(i) = t_train.col(order[begin + i]);
            }
            const Gradients grads = gradient(params, bx, bt);
            loss_sum += loss_mse(forward_normalized(params, bx), bt);
            adam_step(params, grads, adam, lr, cfg);
            ++batches;
        }

        EpochStats stats;
        stats.learning_rate = lr;
        stats.train_loss = loss_sum / static_cast<double>(batches);
        stats.val_loss =
            x_val.cols() > 0
                ? loss_mse(forward_normalized(params, x_val), t_val)
                : 0.0;
        if (!std::isfinite(stats.train_loss) ||
            !std::isfinite(stats.val_loss) || !params.all_finite()) {
            throw DivergenceError("train: non-finite loss at epoch " +
                                  std::to_string(epoch));
        }
        result.history.push_back(stats);
    }

    result.model.params = std::move(params);
    return result;
}

void save_model(const Model& model, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw ParseError("model: cannot write " + path);
    const MLPParams& p = model.params;
    std::fprintf(f, "scrub-mlp 1\n");
    std::fprintf(f, "layers 8 %d %d 9\n", p.hidden(), p.hidden());
    auto dump_vec = [&](const char* name, const Eigen::VectorXd& v) {
        std::fprintf(f, "%s", name);
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            std::fprintf(f, " %.17g", v[i]);
        }
        std::fputc('\n', f);
    };
    dump_vec("in_mean", model.norm.in_mean);
    dump_vec("in_std", model.norm.in_std);
    dump_vec("out_mean", model.norm.out_mean);
    dump_vec("out_std", model.norm.out_std);
    auto dump_mat = [&](const char* name, const Eigen::MatrixXd& m) {
        std::fprintf(f, "%s %ld %ld\n", name, static_cast<long>(m.rows()),
                     static_cast<long>(m.cols()));
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                std::fprintf(f, "%s%.17g", j == 0 ? "" : " ", m(i, j));
            }
            std::fputc('\n', f);
        }
    };
    dump_mat("W1", p.w1);
    dump_vec("b1", p.b1);
    dump_mat("W2", p.w2);
    dump_vec("b2", p.b2);
    dump_mat("W3", p.w3);
    dump_vec("b3", p.b3);
    std::fclose(f);
}

Model load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("model: cannot open " + path);

    std::string word;
    auto need = [&](const std::string& section) {
        if (!(in >> word) || word != section) {
            throw ParseError("model: missing section '" + section + "' in " +
                             path);
        }
    };
    auto read_value = [&](const std::string& section) {
        double v = 0.0;
        if (!(in >> v)) {
            throw ParseError("model: truncated section '" + section + "' in " +
                             path);
        }
        return v;
    };

    need("scrub-mlp");
    int version = 0;
    if (!(in >> version)) throw ParseError("model: missing version in " + path);
    if (version != 1) {
        throw ParseError("model: unsupported format version " +
                         std::to_string(version) + " in " + path);
    }

    need("layers");
    int d_in = 0, h1 = 0, h2 = 0, d_out = 0;
    if (!(in >> d_in >> h1 >> h2 >> d_out)) {
        throw ParseError("model: truncated section 'layers' in " + path);
    }
    if (d_in != 8 || d_out != 9 || h1 != h2 || h1 <= 0) {
        throw ParseError("model: unsupported layer sizes in " + path);
    }

    Model model;
    auto read_vec = [&](const std::string& section, Eigen::Index size) {
        need(section);
        Eigen::VectorXd v(size);
        for (Eigen::Index i = 0; i < size; ++i) v[i] = read_value(section);
        return v;
    };
    auto read_mat = [&](const std::string& section) {
        need(section);
        long rows = 0, cols = 0;
        if (!(in >> rows >> cols) || rows <= 0 || cols <= 0) {
            throw ParseError("model: bad dimensions for '" + section + "' in " +
                             path);
        }
        Eigen::MatrixXd m(rows, cols);
        for (long i = 0; i < rows; ++i) {
            for (long j = 0; j < cols; ++j) {
                m(i, j) = read_value(section);
            }
        }
        return m;
    };

    model.norm.in_mean = read_vec("in_mean", 8);
    model.norm.in_std = read_vec("in_std", 8);
    model.norm.out_mean = read_vec("out_mean", 9);
    model.norm.out_std = read_vec("out_std", 9);
    model.params.w1 = read_mat("W1");
    model.params.b1 = read_vec("b1", h1);
    model.params.w2 = read_mat("W2");
    model.params.b2 = read_vec("b2", h2);
    model.params.w3 = read_mat("W3");
    model.params.b3 = read_vec("b3", 9);
    check_shapes(model.params);
    return model;
}

}  // namespace scrub
