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

#include "scrub/report.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "scrub/brush.hpp"
#include "scrub/control.hpp"
#include "scrub/dataset.hpp"
#include "scrub/errors.hpp"
#include "scrub/mlp.hpp"
#include "scrub/segment.hpp"
#include "scrub/statics.hpp"
#include "scrub/svg.hpp"

namespace scrub {

void write_csv_header(std::ostream& out, const std::string& subcommand,
                      const std::string& config_line) {
    out << "# " << kToolVersion << " " << subcommand << "\n";
    out << "# config: " << config_line << "\n";
}

namespace {

namespace fs = std::filesystem;

std::ofstream open_csv(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("report: cannot write " + path.string());
    out << std::setprecision(9);
    return out;
}

void write_brush_csv(const fs::path& path) {
    const double mu = 0.93, ro = 35.0, ri = 25.0;
    const BacklashFit backlash{9.34, 52.4, 1.0};
    std::ofstream out = open_csv(path);
    write_csv_header(out, "brush",
                     "mu=0.93 ro=35 ri=25 k=9.34 delta=52.4 fmin=0 fmax=11 "
                     "step=0.5");
    out << "force_N,moment_uni_Nmm,moment_cr_Nmm,moment_backlash_Nmm\n";
    for (double f = 0.0; f <= 11.0 + 1e-9; f += 0.5) {
        out << f << "," << disc_slope_per_force(mu, ro) * f << ","
            << counter_slope_per_force(mu, ri, ro) * f << ","
            << backlash_moment(backlash, f) << "\n";
    }
}

void write_track_csv(const fs::path& path, const std::string& label,
                     double f_gravity, double extra,
                     const TrackingReport& report) {
    std::ofstream out = open_csv(path);
    std::ostringstream cfg;
    cfg << "model=" << label << " fg=" << f_gravity
        << " extra_load=" << extra << " waypoints=" << report.series.size();
    write_csv_header(out, "track", cfg.str());
    out << "waypoint,target_x,target_y,target_z,reached_x,reached_y,"
           "reached_z,err_mm,err_deg\n";
    for (std::size_t i = 0; i < report.series.size(); ++i) {
        const TrackingRecord& r = report.series[i];
        out << i << "," << r.target.position.x() << ","
            << r.target.position.y() << "," << r.target.position.z() << ","
            << r.reached.position.x() << "," << r.reached.position.y() << ","
            << r.reached.position.z() << "," << r.err_mm << "," << r.err_deg
            << "\n";
    }
}

void write_force_csv(const fs::path& path, const ForceRampReport& report) {
    std::ofstream out = open_csv(path);
    std::ostringstream cfg;
    cfg << "fg=15.3 ramp=1..8.5 surface_z=" << report.surface_z;
    write_csv_header(out, "force", cfg.str());
    out << "delta_r,K,b,R2,gain_err_pct\n";
    for (const ForceRampSweep& s : report.sweeps) {
        out << s.delta_r << "," << s.gain << "," << s.offset << ","
            << s.r_squared << "," << s.gain_error_percent << "\n";
    }
    out << "# hardware reference fits (measured on the physical arm, for "
           "comparison only)\n";
    for (const HardwareReferenceFit& r : hardware_reference_fits()) {
        out << "# ref delta_r=" << r.delta_r << " R2=" << r.r_squared
            << " gain_err_pct=" << r.gain_error_percent
            << " offset=" << r.offset << "\n";
    }
}

struct CleanRow {
    std::string surface;
    long before = 0;
    long after = 0;
    double percent = 0.0;
};

CleanRow clean_surface(const std::string& surface, const fs::path& before_path,
                       const fs::path& after_path) {
    const RasterImage before = read_pixmap(before_path.string());
    const RasterImage after = read_pixmap(after_path.string());
    CleanRow row;
    row.surface = surface;
    if (surface == "plate") {
        row.before = segment_red(before, plate_roi(before)).count;
        row.after = segment_red(after, plate_roi(after)).count;
    } else {
        row.before = segment_dark(before, seat_roi(before)).count;
        row.after = segment_dark(after, seat_roi(after)).count;
    }
    row.percent = cleaned_percent(row.before, row.after);
    return row;
}

}  // namespace

int run_report(const ReportOptions& options, std::ostream& log) {
    const fs::path outdir(options.outdir);
    fs::create_directories(outdir);

    log << kToolVersion << " report (seed " << options.seed << ", hidden "
        << options.hidden_width << ", epochs " << options.epochs << ")\n";

    // Brush analytics.
    write_brush_csv(outdir / "brush.csv");
    const double k_uni = disc_slope_per_force(0.93, 44.45);
    const BacklashFit backlash{9.34, 52.4, 1.0};
    double reduction_sum = 0.0;
    int reduction_n = 0;
    for (double f = 4.0; f <= 11.0 + 1e-9; f += 0.5) {
        reduction_sum += 1.0 - backlash_moment(backlash, f) / (k_uni * f);
        ++reduction_n;
    }
    const double avg_reduction = 100.0 * reduction_sum / reduction_n;

    // Corpus.
    DatasetSpec spec;
    spec.seed = options.seed;
    const Dataset corpus = generate(spec, options.plant);
    save_dataset(corpus, (outdir / "dataset.csv").string());
    const auto [train_set, val_set] = split(corpus, 0.8, options.seed);

    // Models: load-aware across all weight levels, baseline at the lightest
    // level only.
    TrainConfig tcfg;
    tcfg.hidden_width = options.hidden_width;
    tcfg.epochs = options.epochs;
    tcfg.seed = options.seed;
    const TrainResult aware = train(train_set, val_set, tcfg);
    save_model(aware.model, (outdir / "model.txt").string());

    DatasetSpec naive_spec;
    naive_spec.weight_levels = {6.2};
    naive_spec.samples_per_level = 2000;
    naive_spec.seed = options.seed + 1;
    const Dataset naive_corpus = generate(naive_spec, options.plant);
    const auto [naive_train, naive_val] = split(naive_corpus, 0.8, options.seed);
    const TrainResult naive = train(naive_train, naive_val, tcfg);

    {
        std::ofstream out = open_csv(outdir / "training.csv");
        std::ostringstream cfg;
        cfg << "seed=" << options.seed << " hidden=" << options.hidden_width
            << " epochs=" << options.epochs << " batch=16 lr=0.001 gamma=0.9";
        write_csv_header(out, "train", cfg.str());
        out << "epoch,learning_rate,train_loss,val_loss\n";
        for (std::size_t e = 0; e < aware.history.size(); ++e) {
            out << e << "," << aware.history[e].learning_rate << ","
                << aware.history[e].train_loss << ","
                << aware.history[e].val_loss << "\n";
        }
    }

    // Circle tracking under a 3.4 N unmodeled tip weight for the baseline;
    // the load-aware model plans with the true total weight.
    Pose center;
    center.position = Eigen::Vector3d(0.0, 0.0, -690.0);
    const Trajectory circle = circle_trajectory(center, 150.0, 100, 0.0, 0.5);

    const auto t_inf0 = std::chrono::steady_clock::now();
    const TrackingReport rep_aware = track_and_evaluate(
        circle, model_planner(aware.model), options.plant, 9.6, 0.0);
    const auto t_inf1 = std::chrono::steady_clock::now();
    const TrackingReport rep_naive = track_and_evaluate(
        circle, model_planner(naive.model), options.plant, 6.2, 3.4);
    const double ms_per_waypoint =
        std::chrono::duration<double, std::milli>(t_inf1 - t_inf0).count() /
        static_cast<double>(circle.waypoints.size());

    write_track_csv(outdir / "track_aware.csv", "load_aware", 9.6, 0.0,
                    rep_aware);
    write_track_csv(outdir / "track_naive.csv", "single_load_baseline", 6.2,
                    3.4, rep_naive);
    {
        SvgSeries target{"target", {}}, aware_s{"load aware", {}},
            naive_s{"baseline", {}};
        for (const auto& r : rep_aware.series) {
            target.points.emplace_back(r.target.position.x(),
                                       r.target.position.y());
            aware_s.points.emplace_back(r.reached.position.x(),
                                        r.reached.position.y());
        }
        for (const auto& r : rep_naive.series) {
            naive_s.points.emplace_back(r.reached.position.x(),
                                        r.reached.position.y());
        }
        write_svg_plot((outdir / "track.svg").string(),
                       "circle tracking under load", "x (mm)", "y (mm)",
                       {target, aware_s, naive_s});
    }

    // Open-loop force ramps.
    const ForceRampReport force =
        force_ramp_eval(model_planner(aware.model), options.plant, {});
    write_force_csv(outdir / "force.csv", force);
    {
        std::vector<SvgSeries> series;
        for (const ForceRampSweep& s : force.sweeps) {
            SvgSeries line{"dr=" + std::to_string(static_cast<int>(s.delta_r)),
                           {}};
            for (std::size_t i = 0; i < s.targets.size(); ++i) {
                line.points.emplace_back(s.targets[i], s.measured[i]);
            }
            series.push_back(std::move(line));
        }
        write_svg_plot((outdir / "force.svg").string(),
                       "open-loop force ramps", "target (N)", "measured (N)",
                       series);
    }

    // Cleaning metrics on the checked-in fixtures plus the reference count
    // pairs reported for the physical system.
    const fs::path fx(options.fixtures_dir);
    const CleanRow plate = clean_surface("plate", fx / "plate_before.ppm",
                                         fx / "plate_after.ppm");
    const CleanRow seat =
        clean_surface("seat", fx / "seat_before.ppm", fx / "seat_after.ppm");
    {
        std::ofstream out = open_csv(outdir / "clean.csv");
        write_csv_header(out, "clean", "fixtures=" + fx.string());
        out << "surface,before_px,after_px,cleaned_pct\n";
        out << "plate," << plate.before << "," << plate.after << ","
            << plate.percent << "\n";
        out << "seat," << seat.before << "," << seat.after << ","
            << seat.percent << "\n";
        out << "# reference count pairs from the physical trials\n";
        const long ref[4][2] = {
            {575188, 1624}, {679327, 455273}, {425240, 450}, {537547, 207614}};
        const char* names[4] = {"plate_scrub", "plate_rinse_only",
                                "seat_scrub", "seat_rinse_only"};
        for (int i = 0; i < 4; ++i) {
            out << "# ref " << names[i] << "," << ref[i][0] << "," << ref[i][1]
                << "," << cleaned_percent(ref[i][0], ref[i][1]) << "\n";
        }
    }

    // Summary.
    std::ostringstream sum;
    sum << std::fixed << std::setprecision(2);
    sum << "== brush ==\n";
    sum << "unidirectional slope (44.45 mm disc): " << k_uni
        << " N*mm/N, extracted mu " << extract_mu_from_slope(k_uni, 44.45)
        << "\n";
    sum << "counter-rotating two-face slope (25/35 mm): "
        << paper_slope_counter(0.93, 25.0, 35.0)
        << " N*mm/N; integrated slope: "
        << counter_slope_per_force(0.93, 25.0, 35.0) << " N*mm/N\n";
    sum << "zero-moment radius ratio: " << zero_moment_ratio() << "\n";
    sum << "average net-moment reduction over 4..11 N: " << avg_reduction
        << " %\n";
    sum << "== learned model ==\n";
    sum << "final val loss (normalized): " << std::setprecision(6)
        << aware.history.back().val_loss << std::setprecision(2) << "\n";
    sum << "circle tracking, load-aware:  mean " << rep_aware.mean_err_mm
        << " mm (" << rep_aware.mean_err_pct_length << " %L), mean "
        << rep_aware.mean_err_deg << " deg\n";
    sum << "circle tracking, baseline +3.4 N: mean " << rep_naive.mean_err_mm
        << " mm (" << rep_naive.mean_err_pct_length << " %L), mean "
        << rep_naive.mean_err_deg << " deg\n";
    sum << "aware/baseline error ratio: "
        << rep_aware.mean_err_mm / rep_naive.mean_err_mm << "\n";
    sum << "inference: " << std::setprecision(3) << ms_per_waypoint
        << " ms/waypoint (informational)\n"
        << std::setprecision(2);
    sum << "== force control ==\n";
    for (const ForceRampSweep& s : force.sweeps) {
        sum << "dr=" << std::setw(2) << static_cast<int>(s.delta_r) << " mm: K="
            << std::setprecision(4) << s.gain << " b=" << s.offset
            << " R2=" << s.r_squared << std::setprecision(2) << " gain err "
            << s.gain_error_percent << " %\n";
    }
    sum << "== cleaning (synthetic fixtures) ==\n";
    sum << "plate: before " << plate.before << " px, after " << plate.after
        << " px, cleaned " << plate.percent << " %\n";
    sum << "seat:  before " << seat.before << " px, after " << seat.after
        << " px, cleaned " << seat.percent << " %\n";

    std::ofstream summary(outdir / "summary.txt");
    summary << sum.str();
    log << sum.str();
    return 0;
}

}  // namespace scrub
