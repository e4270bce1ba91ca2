#ifndef HARNESS_RUNNER_HPP_
#define HARNESS_RUNNER_HPP_

#include "harness/metrics.hpp"
#include "harness/run_config.hpp"
#include "harness/trajectory.hpp"
#include "simworld/course.hpp"

namespace harness {

struct CalibrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunResult {
    MetricsReport metrics;
    std::vector<TrajectoryRecord> records;
    bool success = false;
};

// Renders the course from `pose`, runs disk detection and returns the
// quadrant-ordered reference marker. Throws CalibrationError unless the
// detection succeeds in Direct mode.
guidance::ReferenceMarker calibrate(const simworld::Course& course,
                                    const simworld::VehicleState& pose,
                                    const markers::PipelineConfig& pipeline,
                                    uint64_t seed);

// Head-on pose at `distance` in front of the gate's printed face.
simworld::VehicleState reference_pose(const simworld::GatePose& gate, double distance,
                                      const simworld::CameraModel& camera);

// Closed-loop scenario: render, detect, steer, integrate, log; ends on
// course completion, collision, bounds exit or max_steps. Writes
// trajectory.csv and metrics.json into cfg.out_dir.
RunResult run(const RunConfig& cfg);

}  // namespace harness

#endif  // HARNESS_RUNNER_HPP_
