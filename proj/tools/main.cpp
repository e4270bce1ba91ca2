#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "harness/bench.hpp"
#include "harness/detect_dir.hpp"
#include "harness/runner.hpp"
#include "harness/svg_plot.hpp"
#include "simworld/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRunFailed = 3;
constexpr int kExitCalibration = 4;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"emulated pixel-processor-array gate navigation"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "closed-loop scenario run");
    std::string run_config_path, run_out;
    uint64_t run_seed = 0;
    bool run_seed_set = false;
    run_cmd->add_option("--config", run_config_path, "run config file")->required();
    run_cmd->add_option("--out", run_out, "output directory");
    run_cmd->add_option("--seed", run_seed, "seed override")->each([&](const std::string&) {
        run_seed_set = true;
    });

    // calibrate
    auto* cal_cmd = app.add_subcommand("calibrate", "capture a reference marker");
    std::string cal_course, cal_pose, cal_out;
    cal_cmd->add_option("--course", cal_course, "course file")->required();
    cal_cmd->add_option("--pose", cal_pose, "x,y,theta_deg camera pose")->required();
    cal_cmd->add_option("--out", cal_out, "reference output file")->required();

    // detect
    auto* det_cmd = app.add_subcommand("detect", "batch detection over PGM frames");
    std::string det_frames, det_config, det_out;
    det_cmd->add_option("--frames", det_frames, "directory of .pgm frames")->required();
    det_cmd->add_option("--config", det_config, "run config file (pipeline settings)");
    det_cmd->add_option("--out", det_out, "JSON-lines output file (default stdout)");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "time the detection pipeline");
    int bench_iters = 200;
    bench_cmd->add_option("--iters", bench_iters, "iterations over the frame set");

    // plot
    auto* plot_cmd = app.add_subcommand("plot", "render SVG plots from a trajectory");
    std::string plot_traj, plot_out, plot_course;
    plot_cmd->add_option("--traj", plot_traj, "trajectory CSV")->required();
    plot_cmd->add_option("--out", plot_out, "output directory")->required();
    plot_cmd->add_option("--course", plot_course, "course file (adds gate glyphs)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) {
            harness::RunConfig cfg = harness::load_run_config(run_config_path);
            if (!run_out.empty()) cfg.out_dir = run_out;
            if (run_seed_set) cfg.seed = run_seed;
            harness::RunResult result = harness::run(cfg);
            std::cout << result.metrics.to_json() << "\n";
            return result.success ? kExitOk : kExitRunFailed;
        }
        if (*cal_cmd) {
            simworld::Course course = simworld::load_course(cal_course);
            simworld::VehicleState pose;
            double deg = 0.0;
            if (std::sscanf(cal_pose.c_str(), "%lf,%lf,%lf", &pose.x, &pose.y, &deg) != 3) {
                std::cerr << "bad --pose, expected x,y,theta_deg\n";
                return kExitConfig;
            }
            pose.heading = deg * M_PI / 180.0;
            markers::PipelineConfig pipeline;
            try {
                guidance::ReferenceMarker ref =
                    harness::calibrate(course, pose, pipeline, course.seed);
                harness::write_reference(cal_out, ref);
            } catch (const harness::CalibrationError& e) {
                std::cerr << "calibration failed: " << e.what() << "\n";
                return kExitCalibration;
            }
            return kExitOk;
        }
        if (*det_cmd) {
            markers::PipelineConfig pipeline;
            if (!det_config.empty()) {
                pipeline = harness::load_run_config(det_config).pipeline;
            }
            if (det_out.empty()) {
                harness::detect_directory(det_frames, pipeline, std::cout);
            } else {
                std::ofstream out(det_out);
                if (!out) {
                    std::cerr << "cannot open " << det_out << "\n";
                    return kExitConfig;
                }
                harness::detect_directory(det_frames, pipeline, out);
            }
            return kExitOk;
        }
        if (*bench_cmd) {
            harness::BenchReport report = harness::bench(bench_iters);
            std::cout << report.to_text();
            return kExitOk;
        }
        if (*plot_cmd) {
            std::vector<harness::TrajectoryRecord> records =
                harness::read_trajectory(plot_traj);
            std::optional<simworld::Course> course;
            if (!plot_course.empty()) course = simworld::load_course(plot_course);
            std::filesystem::create_directories(plot_out);
            harness::plot_all(records, course ? &*course : nullptr, plot_out);
            return kExitOk;
        }
    } catch (const simworld::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRunFailed;
    }
    return kExitOk;
}
