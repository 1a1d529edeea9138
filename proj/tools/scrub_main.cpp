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

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "scrub/brush.hpp"
#include "scrub/control.hpp"
#include "scrub/dataset.hpp"
#include "scrub/errors.hpp"
#include "scrub/image.hpp"
#include "scrub/mlp.hpp"
#include "scrub/report.hpp"
#include "scrub/segment.hpp"
#include "scrub/svg.hpp"

namespace fs = std::filesystem;
using namespace scrub;

namespace {

std::ostream& open_or_stdout(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw ParseError("cannot write " + path);
    return file;
}

PlantConfig plant_from_path(const std::string& path) {
    return path.empty() ? PlantConfig{} : load_plant_config(path);
}

int cmd_brush(double mu, double ro, double ri, double k, double delta,
              double fmin, double fmax, double step, const std::string& out,
              const std::string& svg) {
    const BacklashFit backlash{k, delta, 1.0};
    std::ofstream file;
    std::ostream& os = open_or_stdout(file, out);
    os << std::setprecision(9);
    std::ostringstream cfg;
    cfg << "mu=" << mu << " ro=" << ro << " ri=" << ri << " k=" << k
        << " delta=" << delta << " fmin=" << fmin << " fmax=" << fmax
        << " step=" << step;
    write_csv_header(os, "brush", cfg.str());
    os << "force_N,moment_uni_Nmm,moment_cr_Nmm,moment_backlash_Nmm\n";
    SvgSeries uni{"unidirectional", {}}, cr{"counter integral", {}},
        bl{"counter backlash", {}};
    for (double f = fmin; f <= fmax + 1e-9; f += step) {
        const double m_uni = disc_slope_per_force(mu, ro) * f;
        const double m_cr = counter_slope_per_force(mu, ri, ro) * f;
        const double m_bl = backlash_moment(backlash, f);
        os << f << "," << m_uni << "," << m_cr << "," << m_bl << "\n";
        uni.points.emplace_back(f, m_uni);
        cr.points.emplace_back(f, m_cr);
        bl.points.emplace_back(f, m_bl);
    }
    if (!svg.empty()) {
        write_svg_plot(svg, "brush moment vs normal force", "force (N)",
                       "moment (N*mm)", {uni, cr, bl});
    }
    return 0;
}

int cmd_dataset(const std::string& out, std::uint64_t seed, int per_level,
                double noise, const std::string& plant_path) {
    DatasetSpec spec;
    spec.seed = seed;
    spec.samples_per_level = per_level;
    spec.noise_sigma = noise;
    const Dataset ds = generate(spec, plant_from_path(plant_path));

    // Config echo rides in front of the data as comment lines.
    std::ofstream file(out);
    if (!file) throw ParseError("cannot write " + out);
    std::ostringstream cfg;
    cfg << "seed=" << seed << " per_level=" << per_level << " noise=" << noise
        << " levels=6.2,8.475,10.75,13.025,15.3";
    write_csv_header(file, "dataset", cfg.str());
    file.close();

    const std::string tmp = out + ".rows";
    save_dataset(ds, tmp);
    std::ifstream rows(tmp, std::ios::binary);
    std::ofstream append(out, std::ios::binary | std::ios::app);
    append << rows.rdbuf();
    rows.close();
    append.close();
    fs::remove(tmp);
    std::cout << "wrote " << ds.size() << " samples to " << out << "\n";
    return 0;
}

int cmd_train(const std::string& data, int hidden, int epochs,
              std::uint64_t seed, const std::string& out) {
    const Dataset ds = load_dataset(data);
    const auto [train_set, val_set] = split(ds, 0.8, seed);
    TrainConfig cfg;
    cfg.hidden_width = hidden;
    cfg.epochs = epochs;
    cfg.seed = seed;
    const TrainResult result = train(train_set, val_set, cfg);
    save_model(result.model, out);
    std::cout << "epoch,learning_rate,train_loss,val_loss\n";
    for (std::size_t e = 0; e < result.history.size(); ++e) {
        std::cout << e << "," << result.history[e].learning_rate << ","
                  << result.history[e].train_loss << ","
                  << result.history[e].val_loss << "\n";
    }
    std::cout << "model written to " << out << "\n";
    return 0;
}

int cmd_track(const std::string& model_path, const std::string& out,
              const std::string& svg, const std::string& plant_path,
              double fg, double extra, double diameter, int waypoints,
              double dwell, double z, double fn) {
    const PlantConfig plant = plant_from_path(plant_path);
    const Model model = load_model(model_path);
    Pose center;
    center.position = Eigen::Vector3d(0.0, 0.0, z);
    const Trajectory traj =
        circle_trajectory(center, diameter, waypoints, fn, dwell);
    const TrackingReport rep =
        track_and_evaluate(traj, model_planner(model), plant, fg, extra);

    std::ofstream file;
    std::ostream& os = open_or_stdout(file, out);
    os << std::setprecision(9);
    std::ostringstream cfg;
    cfg << "model=" << model_path << " fg=" << fg << " extra_load=" << extra
        << " diameter=" << diameter << " waypoints=" << waypoints
        << " dwell=" << dwell << " z=" << z << " fn=" << fn;
    write_csv_header(os, "track", cfg.str());
    os << "waypoint,target_x,target_y,target_z,reached_x,reached_y,reached_z,"
          "err_mm,err_deg\n";
    SvgSeries target{"target", {}}, reached{"reached", {}};
    for (std::size_t i = 0; i < rep.series.size(); ++i) {
        const TrackingRecord& r = rep.series[i];
        os << i << "," << r.target.position.x() << "," << r.target.position.y()
           << "," << r.target.position.z() << "," << r.reached.position.x()
           << "," << r.reached.position.y() << "," << r.reached.position.z()
           << "," << r.err_mm << "," << r.err_deg << "\n";
        target.points.emplace_back(r.target.position.x(),
                                   r.target.position.y());
        reached.points.emplace_back(r.reached.position.x(),
                                    r.reached.position.y());
    }
    os << "# mean_err_mm=" << rep.mean_err_mm
       << " mean_err_pctL=" << rep.mean_err_pct_length
       << " mean_err_deg=" << rep.mean_err_deg
       << " max_err_mm=" << rep.max_err_mm << "\n";
    if (!svg.empty()) {
        write_svg_plot(svg, "circle tracking", "x (mm)", "y (mm)",
                       {target, reached});
    }
    std::cerr << "mean error " << rep.mean_err_mm << " mm ("
              << rep.mean_err_pct_length << " %L), " << rep.mean_err_deg
              << " deg\n";
    return 0;
}

int cmd_force(const std::string& model_path, const std::string& out,
              const std::string& svg, const std::string& plant_path,
              double fg, double fstart, double fend, int steps,
              double surface_z) {
    const PlantConfig plant = plant_from_path(plant_path);
    const Model model = load_model(model_path);
    ForceRampConfig cfg;
    cfg.f_gravity = fg;
    cfg.f_start = fstart;
    cfg.f_end = fend;
    cfg.steps = steps;
    cfg.surface_z = surface_z;
    const ForceRampReport rep =
        force_ramp_eval(model_planner(model), plant, cfg);

    std::ofstream file;
    std::ostream& os = open_or_stdout(file, out);
    os << std::setprecision(9);
    std::ostringstream cfgline;
    cfgline << "model=" << model_path << " fg=" << fg << " ramp=" << fstart
            << ".." << fend << " steps=" << steps << " surface_z=" << surface_z;
    write_csv_header(os, "force", cfgline.str());
    os << "delta_r,K,b,R2,gain_err_pct\n";
    std::vector<SvgSeries> series;
    for (const ForceRampSweep& s : rep.sweeps) {
        os << s.delta_r << "," << s.gain << "," << s.offset << ","
           << s.r_squared << "," << s.gain_error_percent << "\n";
        SvgSeries line{"dr=" + std::to_string(static_cast<int>(s.delta_r)),
                       {}};
        for (std::size_t i = 0; i < s.targets.size(); ++i) {
            line.points.emplace_back(s.targets[i], s.measured[i]);
        }
        series.push_back(std::move(line));
    }
    os << "# hardware reference fits (comparison only)\n";
    for (const HardwareReferenceFit& r : hardware_reference_fits()) {
        os << "# ref delta_r=" << r.delta_r << " R2=" << r.r_squared
           << " gain_err_pct=" << r.gain_error_percent
           << " offset=" << r.offset << "\n";
    }
    if (!svg.empty()) {
        write_svg_plot(svg, "open-loop force ramps", "target (N)",
                       "measured (N)", series);
    }
    return 0;
}

int cmd_clean(const std::string& before_path, const std::string& after_path,
              const std::string& surface, const std::string& maskdir) {
    const RasterImage before = read_pixmap(before_path);
    const RasterImage after = read_pixmap(after_path);

    auto run = [&](const RasterImage& img) {
        if (surface == "plate") {
            const BinaryMask roi = plate_roi(img);
            return std::pair{segment_red(img, roi), roi};
        }
        const BinaryMask roi = seat_roi(img);
        return std::pair{segment_dark(img, roi), roi};
    };
    const auto [seg_before, roi_before] = run(before);
    const auto [seg_after, roi_after] = run(after);

    const double pct = cleaned_percent(seg_before.count, seg_after.count);
    std::cout << "surface=" << surface << "\n";
    std::cout << "before_px=" << seg_before.count << "\n";
    std::cout << "after_px=" << seg_after.count << "\n";
    std::cout << "cleaned_pct=" << std::setprecision(9) << pct << "\n";
    if (seg_after.count > seg_before.count) {
        std::cerr << "warning: contamination grew between the two images\n";
    }

    if (!maskdir.empty()) {
        fs::create_directories(maskdir);
        auto dump = [&](const BinaryMask& m, const std::string& name) {
            RasterImage img = RasterImage::filled(m.width, m.height, 0, 0, 0);
            for (int y = 0; y < m.height; ++y) {
                for (int x = 0; x < m.width; ++x) {
                    if (m.at(x, y)) img.set(x, y, 255, 255, 255);
                }
            }
            write_pixmap(img, (fs::path(maskdir) / name).string());
        };
        dump(roi_before, "roi_before.ppm");
        dump(roi_after, "roi_after.ppm");
        dump(seg_before.mask, "mask_before.ppm");
        dump(seg_after.mask, "mask_after.ppm");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"scrub: simulation, learning and evaluation toolkit for a "
                 "torque-transmitting soft scrubbing arm"};
    app.require_subcommand(1);

    // brush
    double mu = 0.93, ro = 35.0, ri = 25.0, k = 9.34, delta = 52.4;
    double fmin = 0.0, fmax = 11.0, fstep = 0.5;
    std::string brush_out, brush_svg;
    auto* brush = app.add_subcommand("brush", "moment-vs-force sweep (CSV)");
    brush->add_option("--mu", mu, "dynamic friction coefficient");
    brush->add_option("--ro", ro, "outer radius (mm)");
    brush->add_option("--ri", ri, "inner radius (mm)");
    brush->add_option("--k", k, "backlash model slope (N*mm/N)");
    brush->add_option("--delta", delta, "backlash offset (N*mm)");
    brush->add_option("--fmin", fmin, "sweep start (N)");
    brush->add_option("--fmax", fmax, "sweep end (N)");
    brush->add_option("--step", fstep, "sweep step (N)");
    brush->add_option("--out", brush_out, "output CSV (default stdout)");
    brush->add_option("--svg", brush_svg, "optional SVG plot");

    // dataset
    std::string ds_out;
    std::uint64_t ds_seed = 0;
    int per_level = 2000;
    double ds_noise = 0.0;
    std::string ds_plant;
    auto* dataset = app.add_subcommand("dataset", "generate the corpus (CSV)");
    dataset->add_option("--out", ds_out, "output CSV")->required();
    dataset->add_option("--seed", ds_seed, "corpus seed");
    dataset->add_option("--per-level", per_level, "samples per weight level");
    dataset->add_option("--noise", ds_noise, "pose noise sigma (mm)");
    dataset->add_option("--plant", ds_plant, "plant config file");

    // train
    std::string tr_data, tr_out = "model.txt";
    int hidden = 128, epochs = 50;
    std::uint64_t tr_seed = 0;
    auto* train_cmd = app.add_subcommand("train", "train the inverse model");
    train_cmd->add_option("--data", tr_data, "dataset CSV")->required();
    train_cmd->add_option("--hidden", hidden, "hidden width");
    train_cmd->add_option("--epochs", epochs, "training epochs");
    train_cmd->add_option("--seed", tr_seed, "training seed");
    train_cmd->add_option("--out", tr_out, "model output path");

    // track
    std::string tk_model, tk_out, tk_svg, tk_plant;
    double tk_fg = 9.6, tk_extra = 0.0, tk_diameter = 150.0, tk_dwell = 0.5;
    double tk_z = -690.0, tk_fn = 0.0;
    int tk_waypoints = 100;
    auto* track = app.add_subcommand("track", "circle-tracking evaluation");
    track->add_option("--model", tk_model, "model file")->required();
    track->add_option("--out", tk_out, "output CSV (default stdout)");
    track->add_option("--svg", tk_svg, "optional SVG plot");
    track->add_option("--plant", tk_plant, "plant config file");
    track->add_option("--fg", tk_fg, "weight the planner believes in (N)");
    track->add_option("--extra-load", tk_extra, "unmodeled extra weight (N)");
    track->add_option("--diameter", tk_diameter, "circle diameter (mm)");
    track->add_option("--waypoints", tk_waypoints, "waypoint count");
    track->add_option("--dwell", tk_dwell, "dwell per waypoint (s)");
    track->add_option("--z", tk_z, "circle plane height (mm)");
    track->add_option("--fn", tk_fn, "commanded contact force (N)");

    // force
    std::string fc_model, fc_out, fc_svg, fc_plant;
    double fc_fg = 15.3, fc_start = 1.0, fc_end = 8.5, fc_surface = -695.0;
    int fc_steps = 16;
    auto* force = app.add_subcommand("force", "open-loop force ramp sweeps");
    force->add_option("--model", fc_model, "model file")->required();
    force->add_option("--out", fc_out, "output CSV (default stdout)");
    force->add_option("--svg", fc_svg, "optional SVG plot");
    force->add_option("--plant", fc_plant, "plant config file");
    force->add_option("--fg", fc_fg, "arm weight (N)");
    force->add_option("--fstart", fc_start, "ramp start (N)");
    force->add_option("--fend", fc_end, "ramp end (N)");
    force->add_option("--steps", fc_steps, "ramp step count");
    force->add_option("--surface-z", fc_surface, "surface plane height (mm)");

    // clean
    std::string cl_before, cl_after, cl_surface, cl_maskdir;
    auto* clean = app.add_subcommand("clean", "before/after cleaning metrics");
    clean->add_option("--before", cl_before, "pre-clean image (P6)")
        ->required();
    clean->add_option("--after", cl_after, "post-clean image (P6)")
        ->required();
    clean->add_option("--surface", cl_surface, "plate|seat")
        ->required()
        ->check(CLI::IsMember({"plate", "seat"}));
    clean->add_option("--masks", cl_maskdir, "directory for mask dumps");

    // report
    ReportOptions rep;
    std::string rep_plant;
    auto* report = app.add_subcommand("report", "full experiment pipeline");
    report->add_option("--outdir", rep.outdir, "output directory");
    report->add_option("--seed", rep.seed, "pipeline seed");
    report->add_option("--hidden", rep.hidden_width, "hidden width");
    report->add_option("--epochs", rep.epochs, "training epochs");
    report->add_option("--fixtures", rep.fixtures_dir, "fixture directory");
    report->add_option("--plant", rep_plant, "plant config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (brush->parsed()) {
            return cmd_brush(mu, ro, ri, k, delta, fmin, fmax, fstep,
                             brush_out, brush_svg);
        }
        if (dataset->parsed()) {
            return cmd_dataset(ds_out, ds_seed, per_level, ds_noise, ds_plant);
        }
        if (train_cmd->parsed()) {
            return cmd_train(tr_data, hidden, epochs, tr_seed, tr_out);
        }
        if (track->parsed()) {
            return cmd_track(tk_model, tk_out, tk_svg, tk_plant, tk_fg,
                             tk_extra, tk_diameter, tk_waypoints, tk_dwell,
                             tk_z, tk_fn);
        }
        if (force->parsed()) {
            return cmd_force(fc_model, fc_out, fc_svg, fc_plant, fc_fg,
                             fc_start, fc_end, fc_steps, fc_surface);
        }
        if (clean->parsed()) {
            return cmd_clean(cl_before, cl_after, cl_surface, cl_maskdir);
        }
        if (report->parsed()) {
            rep.plant = plant_from_path(rep_plant);
            return run_report(rep, std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
