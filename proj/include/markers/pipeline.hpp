#ifndef MARKERS_PIPELINE_HPP_
#define MARKERS_PIPELINE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "guidance/quadrant.hpp"
#include "ppa/ops.hpp"

namespace markers {

struct SlalomDecodeConfig {
    double f_px = 220.0;              // focal length used for range recovery
    double anchor_diameter_m = 0.13;  // physical diameter of the anchor disk
    double angle_step_deg = 15.0;     // angle encoded per small disk
    double anchor_area_ratio = 2.0;   // anchor must be this much larger
    int max_small_disks = 5;
};

struct PipelineConfig {
    int threshold_level = 128;
    int flood_steps = 4;   // one per nesting level of the double-outline pattern
    int disc_num = 4;
    int p_step = 2;        // shrink radius of the shift-AND filter
    int min_disk_area = 4; // reject residual specks after filtering
    int loss_patience = 10;  // frames to keep previous points after a loss
    SlalomDecodeConfig slalom;
};

// Carries the prior-frame disk locations used when the outline flooding
// route fails. previous_points, when present, has exactly disc_num entries.
struct TrackerState {
    std::optional<std::vector<ppa::PixelCoord>> previous_points;
    int frames_since_lock = 0;
};

enum class DetectMode { Direct, Fallback };

struct MarkerObservation {
    guidance::Quadrangle quad;  // disc_num points ordered by quadrant
    DetectMode mode = DetectMode::Direct;
    uint64_t frame_id = 0;
};

// Wall time spent in each stage of one detection, in nanoseconds.
struct StageTimings {
    int64_t threshold_ns = 0;
    int64_t flooding_ns = 0;
    int64_t denoise_ns = 0;
    int64_t centroid_ns = 0;

    int64_t total() const {
        return threshold_ns + flooding_ns + denoise_ns + centroid_ns;
    }
};

enum class DetectStatus { Direct, Fallback, NoTarget, Degenerate };

struct DetectResult {
    DetectStatus status = DetectStatus::NoTarget;
    std::optional<MarkerObservation> observation;
    StageTimings timing;

    bool found() const { return observation.has_value(); }
};

// Iterated border flooding: round k computes F = flood(B, border),
// removes it (B &= ~F) and, on every round but the last, inverts B. With
// flood_steps = 4 the ideal double-outline pattern reduces to exactly the
// four disk supports, white on black.
ppa::BitImage eliminate_background(ppa::BitImage bin, int flood_steps);

// Shift-AND filter: AND of the four cardinal translations by p_step (the
// source plane itself is not conjoined). Removes any white component whose
// bounding box fits inside (2*p_step+1)^2 when isolated.
ppa::BitImage denoise(const ppa::BitImage& bin, int p_step);

// Repeated scan_event / point-flood / bounding-box extraction. Returns the
// first `expected` component centres in row-major discovery order, or
// nullopt when the plane runs out of white pixels first (underflow:
// miscount upstream).
std::optional<std::vector<ppa::PixelCoord>> extract_centroids(ppa::BitImage bin,
                                                              int expected);

// Full per-frame disk detection: threshold, background elimination,
// filtering, then either direct component extraction (when exactly
// disc_num survive) or point-seeded flooding from the previous frame's
// centres on the inverted plane. Updates `tracker` on success and ages it
// on failure.
DetectResult detect_disks(const ppa::GreyImage& frame, const PipelineConfig& cfg,
                          TrackerState& tracker, uint64_t frame_id = 0);

}  // namespace markers

#endif  // MARKERS_PIPELINE_HPP_
