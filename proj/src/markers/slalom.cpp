#include "markers/slalom.hpp"

#include <algorithm>

#include "markers/components.hpp"

namespace markers {

std::optional<SlalomCommand> decode_slalom(const ppa::GreyImage& frame,
                                           const PipelineConfig& cfg,
                                           TrackerState& tracker) {
    (void)tracker;  // slalom markers are re-decoded from scratch each frame
    ppa::BitImage bin = ppa::threshold(frame, cfg.threshold_level);
    ppa::BitImage extracted =
        denoise(eliminate_background(std::move(bin), cfg.flood_steps), cfg.p_step);
    std::vector<Component> comps =
        extract_components(std::move(extracted), cfg.min_disk_area);

    const auto& sc = cfg.slalom;
    if (comps.size() < 2 || comps.size() > size_t(1 + sc.max_small_disks)) {
        return std::nullopt;
    }
    std::sort(comps.begin(), comps.end(),
              [](const Component& a, const Component& b) { return a.area > b.area; });
    const Component& anchor = comps.front();
    if (anchor.area < sc.anchor_area_ratio * comps[1].area) {
        return std::nullopt;  // no dominant anchor: a gate pattern or clutter
    }
    // small disks must be of a comparable size to each other; a mixed set
    // (this marker plus a distant one behind it) fails here
    if (comps[1].area > 2 * comps.back().area) return std::nullopt;

    int k = static_cast<int>(comps.size()) - 1;
    double small_col = 0.0;
    long row_sum = anchor.centre.row, col_sum = anchor.centre.col;
    for (int i = 1; i <= k; ++i) {
        small_col += comps[i].centre.col;
        row_sum += comps[i].centre.row;
        col_sum += comps[i].centre.col;
    }
    small_col /= k;

    SlalomCommand cmd;
    cmd.direction =
        anchor.centre.col < small_col ? TurnDirection::Left : TurnDirection::Right;
    cmd.angle_deg = k * sc.angle_step_deg;
    // the shift-AND filter shrinks the anchor box by p_step on each side
    double apparent_h = anchor.box.height() + 1 + 2 * cfg.p_step;
    cmd.range_m = sc.f_px * sc.anchor_diameter_m / apparent_h;
    cmd.centroid = {static_cast<int>(row_sum / (k + 1)),
                    static_cast<int>(col_sum / (k + 1))};
    return cmd;
}

}  // namespace markers
