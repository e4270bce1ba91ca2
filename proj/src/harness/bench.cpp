#include "harness/bench.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "guidance/controller.hpp"
#include "simworld/render.hpp"

namespace harness {

namespace {

int64_t now_ns() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

simworld::Course bench_course() {
    simworld::Course course;
    course.bounds = {0, 10, 0, 10};
    simworld::GatePose gate;
    gate.x = 5.0;
    gate.y = 5.0;
    gate.facing = 0.0;
    course.gates.push_back(gate);
    course.render.noise_sigma = 2.0;
    course.render.light_spot_count = 2;
    return course;
}

}  // namespace

BenchReport bench(int iterations) {
    simworld::Course course = bench_course();
    simworld::Rng rng(99);
    markers::PipelineConfig pipeline;

    // representative frames over the working distance range
    std::vector<ppa::GreyImage> frames;
    for (double dist : {0.6, 1.0, 1.6, 2.2}) {
        simworld::VehicleState pose;
        pose.x = course.gates[0].x - dist - course.camera.mount_forward;
        pose.y = course.gates[0].y;
        frames.push_back(
            simworld::render(course, pose, course.camera, course.render, rng).frame);
    }
    // broken-outline frame: whitewash a band through both outlines so the
    // fallback route runs too
    {
        ppa::GreyImage broken = frames[1];
        for (int r = 0; r < ppa::kSize; ++r)
            for (int c = 160; c < 176; ++c) broken.at(r, c) = 255;
        frames.push_back(broken);
    }

    // prime a tracker from a clean frame so the broken frame falls back
    markers::TrackerState tracker;
    (void)markers::detect_disks(frames[1], pipeline, tracker);

    std::vector<int64_t> t_thresh, t_flood, t_denoise, t_centroid, t_control, t_total;
    guidance::ControllerConfig ctrl;
    guidance::PidState s1, s2;

    for (int it = 0; it < iterations; ++it) {
        for (const auto& frame : frames) {
            markers::TrackerState local = tracker;
            markers::DetectResult det = markers::detect_disks(frame, pipeline, local);
            t_thresh.push_back(det.timing.threshold_ns);
            t_flood.push_back(det.timing.flooding_ns);
            t_denoise.push_back(det.timing.denoise_ns);
            t_centroid.push_back(det.timing.centroid_ns);

            int64_t c0 = now_ns();
            guidance::ControlError err{double(it % 32 - 16), double(it % 8 - 4)};
            (void)guidance::steering_output(s1, s2, ctrl, err);
            int64_t c_ns = now_ns() - c0;
            t_control.push_back(c_ns);
            t_total.push_back(det.timing.total() + c_ns);
        }
    }

    BenchReport report;
    report.frames = static_cast<int>(frames.size());
    report.iterations = iterations;
    report.threshold = summarize_ns(t_thresh);
    report.flooding = summarize_ns(t_flood);
    report.denoise = summarize_ns(t_denoise);
    report.centroid_scan = summarize_ns(t_centroid);
    report.control = summarize_ns(t_control);
    report.frame_total = summarize_ns(t_total);
    return report;
}

std::string BenchReport::to_text() const {
    std::ostringstream out;
    char buf[160];
    out << "stage                     mean [us]     p99 [us]\n";
    auto row = [&](const char* name, const StageStats& s) {
        std::snprintf(buf, sizeof(buf), "%-24s %9.2f %12.2f\n", name, s.mean_ns / 1e3,
                      s.p99_ns / 1e3);
        out << buf;
    };
    row("image thresholding", threshold);
    row("flooding / extraction", flooding);
    row("de-noising", denoise);
    row("centroid scan", centroid_scan);
    row("control step", control);
    row("frame total", frame_total);
    std::snprintf(buf, sizeof(buf),
                  "mean frame: %.3f ms (budget %.1f ms, ~%.0f fps equivalent) over %d "
                  "frames x %d iterations\n",
                  mean_frame_ms(), budget_ms,
                  mean_frame_ms() > 0 ? 1000.0 / mean_frame_ms() : 0.0, frames, iterations);
    out << buf;
    return out.str();
}

}  // namespace harness
