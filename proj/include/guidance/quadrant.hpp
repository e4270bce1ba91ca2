#ifndef GUIDANCE_QUADRANT_HPP_
#define GUIDANCE_QUADRANT_HPP_

#include <array>
#include <optional>

#include "ppa/types.hpp"

namespace guidance {

// Four disk centres with a fixed correspondence: index 0 = top-left,
// 1 = top-right, 2 = bottom-left, 3 = bottom-right of their centroid.
struct Quadrangle {
    std::array<ppa::PixelCoord, 4> points;
    ppa::PixelCoord centroid;  // per-axis floor of the mean

    bool operator==(const Quadrangle&) const = default;
};

// A quadrangle captured head-on at a known distance; the control fixed
// point. Same ordering convention as Quadrangle.
struct ReferenceMarker {
    Quadrangle quad;
};

// Assigns each point to the quadrant given by the sign pair of
// (row - centroid.row, col - centroid.col), computed exactly as
// sign(4*coord - sum). The output is independent of input order.
// Returns nullopt when a point lies exactly on a centroid axis or two
// points share a quadrant (degenerate quadrangle).
std::optional<Quadrangle> order_by_quadrant(const std::array<ppa::PixelCoord, 4>& pts);

}  // namespace guidance

#endif  // GUIDANCE_QUADRANT_HPP_
