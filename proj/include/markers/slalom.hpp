#ifndef MARKERS_SLALOM_HPP_
#define MARKERS_SLALOM_HPP_

#include <optional>

#include "markers/pipeline.hpp"

namespace markers {

enum class TurnDirection { Left, Right };

// Decoded slalom marker: turn direction and angle plus an estimated range
// from the anchor disk's apparent size. `centroid` is the marker's image
// position, used by the approach controller to center it.
struct SlalomCommand {
    TurnDirection direction = TurnDirection::Left;
    double angle_deg = 0.0;      // in (0, 90]
    double range_m = 0.0;        // > 0
    ppa::PixelCoord centroid;
};

// Decodes the slalom pattern: the double-outline border of the gate marker
// with one large anchor disk and k small disks inside. k encodes the angle
// (k * angle_step_deg); the anchor left of the small-disk centroid means a
// left turn. Range comes from the pinhole relation
// range = f_px * anchor_diameter / apparent_anchor_height.
// Returns nullopt when no valid marker is decoded (wrong component count,
// no dominant anchor, inconsistent small-disk sizes).
std::optional<SlalomCommand> decode_slalom(const ppa::GreyImage& frame,
                                           const PipelineConfig& cfg,
                                           TrackerState& tracker);

}  // namespace markers

#endif  // MARKERS_SLALOM_HPP_
