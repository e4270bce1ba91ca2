#ifndef HARNESS_BENCH_HPP_
#define HARNESS_BENCH_HPP_

#include <string>

#include "harness/metrics.hpp"

namespace harness {

struct BenchReport {
    StageStats threshold;
    StageStats flooding;
    StageStats denoise;
    StageStats centroid_scan;
    StageStats control;
    StageStats frame_total;
    int frames = 0;      // frames in the representative set
    int iterations = 0;  // passes over the set
    double budget_ms = 5.0;

    double mean_frame_ms() const { return frame_total.mean_ns / 1e6; }
    bool within_budget() const { return mean_frame_ms() <= budget_ms; }
    std::string to_text() const;
};

// Times the detection pipeline on rendered representative frames (several
// distances, noise, plus a broken-outline frame exercising the fallback).
BenchReport bench(int iterations);

}  // namespace harness

#endif  // HARNESS_BENCH_HPP_
