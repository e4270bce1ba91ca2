#ifndef SIMWORLD_PATTERN_HPP_
#define SIMWORLD_PATTERN_HPP_

#include <array>
#include <cmath>
#include <cstdlib>

#include "markers/slalom.hpp"

namespace simworld {

// Printed pattern boards. Feature positions are fractions of the board
// half-side so boards of any physical size share one layout.
//
// GateMarker: four black disks inside two black concentric square
// outlines on a white board.
// SlalomMarker: the same double outline; inside, one large anchor disk on
// the turn side and k small disks opposite (k encodes the turn angle).
// Clutter kinds are distractors that iterated flooding must reject.
enum class PatternKind { GateMarker, SlalomMarker, ClutterRing, ClutterRingDots, ClutterBlob };

namespace layout {
inline constexpr double kOuterRingOut = 0.92;
inline constexpr double kOuterRingIn = 0.84;
inline constexpr double kInnerRingOut = 0.747;
inline constexpr double kInnerRingIn = 0.667;
inline constexpr double kGateDiskOffset = 0.32;
inline constexpr double kGateDiskRadius = 0.22;
inline constexpr double kAnchorOffset = 0.29;
inline constexpr double kAnchorRadius = 0.27;
inline constexpr double kSmallDiskRadius = 0.10;
// first k entries are used; column near the centre fills first
inline constexpr std::array<std::array<double, 2>, 5> kSmallDiskPos{{
    {0.18, 0.0}, {0.18, 0.28}, {0.18, -0.28}, {0.44, 0.14}, {0.44, -0.14}}};
}  // namespace layout

enum class Paint { Outside, White, Black };

// Samples the board at (s, h) board-plane metres from its centre;
// half = physical half-side. dir/k apply to slalom markers only.
inline Paint sample_pattern(PatternKind kind, markers::TurnDirection dir, int k,
                            double half, double s, double h) {
    double u = s / half, v = h / half;
    double c = std::max(std::abs(u), std::abs(v));
    if (c > 1.0) return Paint::Outside;
    if (c >= layout::kOuterRingIn && c <= layout::kOuterRingOut) return Paint::Black;

    auto in_disk = [&](double du, double dv, double r) {
        return (u - du) * (u - du) + (v - dv) * (v - dv) <= r * r;
    };

    switch (kind) {
        case PatternKind::ClutterRing:
            return Paint::White;
        case PatternKind::ClutterRingDots:
            for (double su : {-1.0, 1.0})
                for (double sv : {-1.0, 1.0})
                    if (in_disk(su * layout::kGateDiskOffset, sv * layout::kGateDiskOffset,
                                layout::kGateDiskRadius))
                        return Paint::Black;
            return Paint::White;
        case PatternKind::ClutterBlob:
            return c <= 0.5 ? Paint::Black : Paint::White;
        case PatternKind::GateMarker:
            if (c >= layout::kInnerRingIn && c <= layout::kInnerRingOut) return Paint::Black;
            for (double su : {-1.0, 1.0})
                for (double sv : {-1.0, 1.0})
                    if (in_disk(su * layout::kGateDiskOffset, sv * layout::kGateDiskOffset,
                                layout::kGateDiskRadius))
                        return Paint::Black;
            return Paint::White;
        case PatternKind::SlalomMarker: {
            if (c >= layout::kInnerRingIn && c <= layout::kInnerRingOut) return Paint::Black;
            // +u appears to the image right when viewed from the front;
            // a left-turn marker puts the anchor on the image left
            double flip = dir == markers::TurnDirection::Left ? -1.0 : 1.0;
            if (in_disk(flip * layout::kAnchorOffset, 0.0, layout::kAnchorRadius))
                return Paint::Black;
            for (int i = 0; i < k && i < 5; ++i) {
                if (in_disk(-flip * layout::kSmallDiskPos[i][0], layout::kSmallDiskPos[i][1],
                            layout::kSmallDiskRadius))
                    return Paint::Black;
            }
            return Paint::White;
        }
    }
    return Paint::Outside;
}

// Gate disk centres in board-plane metres, quadrant order (TL, TR, BL, BR
// as seen from the front; +s is image right, +h is up).
inline std::array<std::array<double, 2>, 4> gate_disk_centres(double half) {
    double o = layout::kGateDiskOffset * half;
    return {{{-o, o}, {o, o}, {-o, -o}, {o, -o}}};
}

}  // namespace simworld

#endif  // SIMWORLD_PATTERN_HPP_
