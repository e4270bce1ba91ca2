#ifndef HARNESS_TRAJECTORY_HPP_
#define HARNESS_TRAJECTORY_HPP_

#include <array>
#include <string>
#include <vector>

namespace harness {

enum class StepMode { Direct, Fallback, Lost };

const char* to_string(StepMode m);
StepMode step_mode_from_string(const std::string& s);

// One control step. Image points are the four quadrant-ordered disk
// centres when the frame had a detection, -1 otherwise (they feed the
// image-plane plot).
struct TrajectoryRecord {
    double t = 0.0;      // s
    double x = 0.0;      // m
    double y = 0.0;      // m
    double theta = 0.0;  // rad
    double v = 0.0;      // m/s
    double steer = 0.0;  // rad (servo position)
    double d = 0.0;      // px, centroid error channel
    double delta = 0.0;  // px, skew error channel
    StepMode mode = StepMode::Lost;
    int gate_index = 0;  // current target gate
    std::array<int, 8> points{-1, -1, -1, -1, -1, -1, -1, -1};  // r0,c0..r3,c3

    bool operator==(const TrajectoryRecord&) const = default;
};

// CSV with a fixed header; doubles are written with round-trip precision
// so parse(emit(records)) == records exactly.
void write_trajectory(const std::string& path, const std::vector<TrajectoryRecord>& records);
std::vector<TrajectoryRecord> read_trajectory(const std::string& path);

}  // namespace harness

#endif  // HARNESS_TRAJECTORY_HPP_
