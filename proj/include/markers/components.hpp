#ifndef MARKERS_COMPONENTS_HPP_
#define MARKERS_COMPONENTS_HPP_

#include <vector>

#include "ppa/ops.hpp"

namespace markers {

struct Component {
    ppa::BoundingBox box;
    ppa::PixelCoord centre;
    int area = 0;
};

// Scan/flood/remove sweep over every white component in row-major
// discovery order; components smaller than min_area are dropped.
std::vector<Component> extract_components(ppa::BitImage work, int min_area);

}  // namespace markers

#endif  // MARKERS_COMPONENTS_HPP_
