#include "harness/runner.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "guidance/slalom_planner.hpp"
#include "harness/log.hpp"
#include "markers/slalom.hpp"
#include "simworld/queries.hpp"
#include "simworld/render.hpp"

namespace harness {

using guidance::SteeringCommand;
using simworld::Course;
using simworld::GatePose;
using simworld::VehicleState;

namespace {

int64_t now_ns() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

// Slalom markers count as passed when the vehicle crosses their
// transverse plane anywhere within the weave corridor.
GatePose passing_gate(const GatePose& g) {
    GatePose adj = g;
    if (g.is_slalom()) adj.width = 3.0;
    return adj;
}

}  // namespace

simworld::VehicleState reference_pose(const GatePose& gate, double distance,
                                      const simworld::CameraModel& camera) {
    VehicleState pose;
    const double fx = std::cos(gate.facing), fy = std::sin(gate.facing);
    pose.heading = gate.facing;
    // place the camera, not the axle, at `distance` from the board
    const double back = distance + camera.mount_forward;
    pose.x = gate.x - back * fx;
    pose.y = gate.y - back * fy;
    return pose;
}

guidance::ReferenceMarker calibrate(const Course& course, const VehicleState& pose,
                                    const markers::PipelineConfig& pipeline,
                                    uint64_t seed) {
    simworld::Rng rng(seed);
    simworld::RenderResult res =
        simworld::render(course, pose, course.camera, course.render, rng);
    markers::TrackerState tracker;
    markers::DetectResult det = markers::detect_disks(res.frame, pipeline, tracker);
    if (det.status != markers::DetectStatus::Direct) {
        throw CalibrationError("calibration pose does not yield a direct 4-disk detection");
    }
    return guidance::ReferenceMarker{det.observation->quad};
}

RunResult run(const RunConfig& cfg) {
    Course course = simworld::load_course(cfg.course_path);
    const uint64_t seed = cfg.seed.value_or(course.seed);

    markers::PipelineConfig pipeline = cfg.pipeline;
    pipeline.slalom.f_px = course.camera.f_px;

    const bool slalom_course =
        !course.gates.empty() && course.gates.front().is_slalom();
    if (slalom_course) {
        pipeline.slalom.anchor_diameter_m =
            2.0 * simworld::layout::kAnchorRadius * (course.gates.front().board_side / 2.0);
    }

    guidance::ReferenceMarker reference{};
    if (!slalom_course) {
        if (cfg.reference == "auto") {
            if (course.gates.empty()) throw simworld::ConfigError("course has no gates");
            reference = calibrate(
                course, reference_pose(course.gates.front(), cfg.ref_distance, course.camera),
                pipeline, seed + 1);
        } else {
            reference = read_reference(cfg.reference);
        }
    }

    guidance::ControllerConfig ctrl = cfg.controller;
    guidance::PidState state_d, state_delta;
    if (ctrl.gains_d.ki > 0)
        state_d.integral_clamp = ctrl.max_steer / (ctrl.pixels_to_radians * ctrl.gains_d.ki);
    if (ctrl.gains_delta.ki > 0)
        state_delta.integral_clamp =
            ctrl.max_steer / (ctrl.pixels_to_radians * ctrl.gains_delta.ki);

    guidance::SlalomPlannerConfig planner_cfg;
    planner_cfg.max_steer = ctrl.max_steer;
    planner_cfg.wheelbase = course.vehicle.wheelbase;
    planner_cfg.steer_rate = course.vehicle.steer_rate;
    planner_cfg.speed = course.vehicle.v_cmd;
    guidance::SlalomPlanner planner(planner_cfg);

    simworld::Rng rng(seed);
    VehicleState vehicle = course.start;
    vehicle.speed = course.vehicle.v_cmd;
    markers::TrackerState tracker;

    const double dt_ctrl = 1.0 / cfg.rate_hz;
    const int substeps = std::max(1, static_cast<int>(std::ceil(dt_ctrl * 1000.0)));
    const double dt_sub = dt_ctrl / substeps;

    RunResult result;
    result.records.reserve(cfg.max_steps);
    std::vector<int64_t> t_threshold, t_flood, t_denoise, t_centroid, t_control, t_frame;

    SteeringCommand last_locked{};
    SteeringCommand cmd{};
    int frames_lost = 0;
    int detected_frames = 0, fallback_frames = 0;
    size_t next_gate = 0;
    double path_len = 0.0;
    double max_speed = 0.0;
    double last_d = 0.0, last_delta = 0.0;
    int64_t substeps_done = 0;
    std::string end_reason = "max_steps";
    bool success = false;

    int step = 0;
    for (; step < cfg.max_steps; ++step) {
        simworld::RenderResult frame =
            simworld::render(course, vehicle, course.camera, course.render, rng);

        TrajectoryRecord rec;
        rec.t = step * dt_ctrl;
        rec.x = vehicle.x;
        rec.y = vehicle.y;
        rec.theta = vehicle.heading;
        rec.v = vehicle.speed;
        rec.gate_index = static_cast<int>(next_gate);
        rec.mode = StepMode::Lost;

        if (slalom_course) {
            markers::StageTimings zero{};
            std::optional<markers::SlalomCommand> decoded =
                markers::decode_slalom(frame.frame, pipeline, tracker);
            (void)zero;
            int64_t c0 = now_ns();
            cmd = planner.update(decoded, vehicle.heading);
            t_control.push_back(now_ns() - c0);
            if (decoded) {
                ++detected_frames;
                rec.mode = StepMode::Direct;
                last_d = decoded->centroid.col + 0.5 - ppa::kSize / 2.0;
                last_delta = 0.0;
            }
        } else {
            markers::DetectResult det =
                markers::detect_disks(frame.frame, pipeline, tracker, step);
            t_threshold.push_back(det.timing.threshold_ns);
            t_flood.push_back(det.timing.flooding_ns);
            t_denoise.push_back(det.timing.denoise_ns);
            t_centroid.push_back(det.timing.centroid_ns);
            t_frame.push_back(det.timing.total());

            int64_t c0 = now_ns();
            if (det.found()) {
                frames_lost = 0;
                ++detected_frames;
                const auto& obs = *det.observation;
                guidance::ControlError err = guidance::compute_errors(obs.quad, reference);
                cmd = guidance::steering_output(state_d, state_delta, ctrl, err);
                last_locked = cmd;
                last_d = err.d;
                last_delta = err.delta;
                rec.mode = obs.mode == markers::DetectMode::Direct ? StepMode::Direct
                                                                   : StepMode::Fallback;
                if (rec.mode == StepMode::Fallback) ++fallback_frames;
                for (int i = 0; i < 4; ++i) {
                    rec.points[2 * i] = obs.quad.points[i].row;
                    rec.points[2 * i + 1] = obs.quad.points[i].col;
                }
            } else {
                ++frames_lost;
                if (frames_lost > ctrl.search_after_frames) {
                    // decay has run its course; sweep until a pattern shows up
                    cmd = {ctrl.search_steer, false};
                } else {
                    cmd = guidance::loss_policy(last_locked, frames_lost, ctrl);
                }
            }
            t_control.push_back(now_ns() - c0);
        }
        rec.d = last_d;
        rec.delta = last_delta;
        rec.steer = vehicle.steer;
        result.records.push_back(rec);

        bool stop = false;
        for (int s = 0; s < substeps && !stop; ++s) {
            VehicleState prev = vehicle;
            vehicle = simworld::step_vehicle(vehicle, cmd, dt_sub, course.vehicle);
            ++substeps_done;
            path_len += std::hypot(vehicle.x - prev.x, vehicle.y - prev.y);
            max_speed = std::max(max_speed, vehicle.speed);

            if (next_gate < course.gates.size() &&
                simworld::gate_passed(prev, vehicle, passing_gate(course.gates[next_gate]))) {
                ++next_gate;
                if (next_gate == course.gates.size()) {
                    end_reason = "course_complete";
                    success = true;
                    stop = true;
                }
            }
            if (simworld::collision(vehicle, course, course.vehicle)) {
                end_reason = "collision";
                result.metrics.collisions = 1;
                stop = true;
            }
            if (!course.bounds.contains(vehicle.x, vehicle.y)) {
                end_reason = "out_of_bounds";
                stop = true;
            }
        }
        if (stop) {
            ++step;
            break;
        }
    }

    // terminal record at the exact end time, so the logged polyline spans
    // the whole integrated path
    if (!result.records.empty()) {
        TrajectoryRecord fin = result.records.back();
        fin.t = substeps_done * dt_sub;
        fin.x = vehicle.x;
        fin.y = vehicle.y;
        fin.theta = vehicle.heading;
        fin.v = vehicle.speed;
        fin.steer = vehicle.steer;
        fin.gate_index = static_cast<int>(next_gate);
        result.records.push_back(fin);
    }

    MetricsReport& m = result.metrics;
    m.gates_passed = static_cast<int>(next_gate);
    m.steps = step;
    m.sim_time = substeps_done * dt_sub;
    m.avg_speed = m.sim_time > 0 ? path_len / m.sim_time : 0.0;
    m.max_speed = max_speed;
    m.detection_rate = step > 0 ? static_cast<double>(detected_frames) / step : 0.0;
    m.fallback_rate = step > 0 ? static_cast<double>(fallback_frames) / step : 0.0;
    m.completed = success;
    m.end_reason = end_reason;
    m.threshold = summarize_ns(t_threshold);
    m.flooding = summarize_ns(t_flood);
    m.denoise = summarize_ns(t_denoise);
    m.centroid_scan = summarize_ns(t_centroid);
    m.control = summarize_ns(t_control);
    m.frame_total = summarize_ns(t_frame);
    result.success = success;

    std::filesystem::create_directories(cfg.out_dir);
    write_trajectory(cfg.out_dir + "/trajectory.csv", result.records);
    std::ofstream mj(cfg.out_dir + "/metrics.json");
    mj << m.to_json() << "\n";
    LOG_INFO("run: %s after %d steps, %d gates, avg %.2f m/s", end_reason.c_str(), step,
             m.gates_passed, m.avg_speed);
    return result;
}

}  // namespace harness
