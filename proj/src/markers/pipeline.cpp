#include "markers/pipeline.hpp"

#include <chrono>

#include "markers/components.hpp"

namespace markers {

using ppa::BitImage;
using ppa::PixelCoord;
using ppa::SeedSpec;

namespace {

int64_t now_ns() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

// A point-flooded blob spanning more than a third of the array cannot be a
// disk; it means the seed leaked into an outline or the border frame.
constexpr int kMaxBlobSpan = ppa::kSize / 3;

}  // namespace

ppa::BitImage eliminate_background(BitImage bin, int flood_steps) {
    for (int k = 1; k <= flood_steps; ++k) {
        BitImage filled = ppa::flood(bin, SeedSpec::border());
        bin.and_not(filled);
        if (k < flood_steps) bin.invert();
    }
    return bin;
}

ppa::BitImage denoise(const BitImage& bin, int p_step) {
    BitImage out = ppa::shift(bin, ppa::Dir::North, p_step);
    out &= ppa::shift(bin, ppa::Dir::South, p_step);
    out &= ppa::shift(bin, ppa::Dir::East, p_step);
    out &= ppa::shift(bin, ppa::Dir::West, p_step);
    return out;
}

std::vector<Component> extract_components(BitImage work, int min_area) {
    std::vector<Component> out;
    while (auto p = ppa::scan_event(work)) {
        BitImage blob = ppa::flood(work, SeedSpec::at(*p));
        work ^= blob;  // blob is a subset of work
        int area = blob.popcount();
        if (area < min_area) continue;
        Component c;
        c.box = *ppa::scan_boundingbox(blob);
        c.centre = c.box.centre();
        c.area = area;
        out.push_back(c);
    }
    return out;
}

std::optional<std::vector<PixelCoord>> extract_centroids(BitImage bin, int expected) {
    std::vector<PixelCoord> centres;
    centres.reserve(expected);
    for (int i = 0; i < expected; ++i) {
        auto p = ppa::scan_event(bin);
        if (!p) return std::nullopt;  // underflow: fewer components than expected
        BitImage blob = ppa::flood(bin, SeedSpec::at(*p));
        centres.push_back(ppa::scan_boundingbox(blob)->centre());
        bin.and_not(blob);
    }
    return centres;
}

namespace {

void age_tracker(TrackerState& tracker, const PipelineConfig& cfg) {
    ++tracker.frames_since_lock;
    if (tracker.frames_since_lock > cfg.loss_patience) {
        tracker.previous_points.reset();
    }
}

DetectResult finish(DetectStatus status, StageTimings timing) {
    DetectResult r;
    r.status = status;
    r.timing = timing;
    return r;
}

}  // namespace

DetectResult detect_disks(const ppa::GreyImage& frame, const PipelineConfig& cfg,
                          TrackerState& tracker, uint64_t frame_id) {
    StageTimings t;

    int64_t t0 = now_ns();
    BitImage bin = ppa::threshold(frame, cfg.threshold_level);
    t.threshold_ns = now_ns() - t0;

    t0 = now_ns();
    BitImage extracted = eliminate_background(bin, cfg.flood_steps);
    t.flooding_ns = now_ns() - t0;

    t0 = now_ns();
    extracted = denoise(extracted, cfg.p_step);
    t.denoise_ns = now_ns() - t0;

    t0 = now_ns();
    std::vector<Component> comps =
        extract_components(std::move(extracted), cfg.min_disk_area);
    t.centroid_ns = now_ns() - t0;

    std::array<PixelCoord, 4> raw;
    DetectMode mode;
    if (static_cast<int>(comps.size()) == cfg.disc_num) {
        for (int i = 0; i < 4; ++i) raw[i] = comps[i].centre;
        mode = DetectMode::Direct;
    } else if (tracker.previous_points) {
        // Outlines broken or merged: flood outward from last frame's disk
        // centres on the inverted plane instead.
        t0 = now_ns();
        BitImage mask = denoise(bin, cfg.p_step);
        mask.invert();
        t.denoise_ns += now_ns() - t0;

        const auto& prev = *tracker.previous_points;
        for (size_t i = 0; i < prev.size(); ++i) {
            if (!mask.get(prev[i])) {
                age_tracker(tracker, cfg);
                return finish(DetectStatus::NoTarget, t);
            }
            t0 = now_ns();
            BitImage blob = ppa::flood(mask, SeedSpec::at(prev[i]));
            t.flooding_ns += now_ns() - t0;

            t0 = now_ns();
            ppa::BoundingBox box = *ppa::scan_boundingbox(blob);
            mask ^= blob;
            t.centroid_ns += now_ns() - t0;
            if (box.height() > kMaxBlobSpan || box.width() > kMaxBlobSpan) {
                age_tracker(tracker, cfg);
                return finish(DetectStatus::NoTarget, t);
            }
            raw[i] = box.centre();
        }
        mode = DetectMode::Fallback;
    } else {
        age_tracker(tracker, cfg);
        return finish(DetectStatus::NoTarget, t);
    }

    auto ordered = guidance::order_by_quadrant(raw);
    if (!ordered) {
        age_tracker(tracker, cfg);
        return finish(DetectStatus::Degenerate, t);
    }

    tracker.previous_points = std::vector<PixelCoord>(ordered->points.begin(),
                                                      ordered->points.end());
    tracker.frames_since_lock = 0;

    DetectResult r;
    r.status = mode == DetectMode::Direct ? DetectStatus::Direct : DetectStatus::Fallback;
    r.observation = MarkerObservation{*ordered, mode, frame_id};
    r.timing = t;
    return r;
}

}  // namespace markers
