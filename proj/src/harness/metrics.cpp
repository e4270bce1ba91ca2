#include "harness/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace harness {

StageStats summarize_ns(std::vector<int64_t> samples) {
    StageStats s;
    if (samples.empty()) return s;
    s.mean_ns = std::accumulate(samples.begin(), samples.end(), int64_t{0}) /
                static_cast<double>(samples.size());
    size_t idx = static_cast<size_t>(0.99 * (samples.size() - 1));
    std::nth_element(samples.begin(), samples.begin() + idx, samples.end());
    s.p99_ns = static_cast<double>(samples[idx]);
    return s;
}

std::string MetricsReport::to_json() const {
    nlohmann::json j;
    j["gates_passed"] = gates_passed;
    j["collisions"] = collisions;
    j["avg_speed"] = avg_speed;
    j["max_speed"] = max_speed;
    j["detection_rate"] = detection_rate;
    j["fallback_rate"] = fallback_rate;
    j["steps"] = steps;
    j["sim_time"] = sim_time;
    j["completed"] = completed;
    j["end_reason"] = end_reason;
    auto stage = [](const StageStats& s) {
        return nlohmann::json{{"mean_ns", s.mean_ns}, {"p99_ns", s.p99_ns}};
    };
    j["timing"] = {
        {"threshold", stage(threshold)},     {"flooding", stage(flooding)},
        {"denoise", stage(denoise)},         {"centroid_scan", stage(centroid_scan)},
        {"control", stage(control)},         {"frame_total", stage(frame_total)},
    };
    return j.dump(2);
}

}  // namespace harness
