#ifndef HARNESS_METRICS_HPP_
#define HARNESS_METRICS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace harness {

struct StageStats {
    double mean_ns = 0.0;
    double p99_ns = 0.0;
};

StageStats summarize_ns(std::vector<int64_t> samples);

// Run summary; timing categories mirror the stages of the on-sensor
// pipeline plus the control step.
struct MetricsReport {
    int gates_passed = 0;
    int collisions = 0;
    double avg_speed = 0.0;       // path length / elapsed sim time
    double max_speed = 0.0;
    double detection_rate = 0.0;  // detected frames / total frames
    double fallback_rate = 0.0;   // fallback frames / total frames
    int steps = 0;
    double sim_time = 0.0;
    bool completed = false;
    std::string end_reason;

    StageStats threshold;
    StageStats flooding;
    StageStats denoise;
    StageStats centroid_scan;
    StageStats control;
    StageStats frame_total;  // detection pipeline total per frame

    std::string to_json() const;
};

}  // namespace harness

#endif  // HARNESS_METRICS_HPP_
