#include "guidance/quadrant.hpp"

namespace guidance {

std::optional<Quadrangle> order_by_quadrant(const std::array<ppa::PixelCoord, 4>& pts) {
    int sum_row = 0, sum_col = 0;
    for (const auto& p : pts) {
        sum_row += p.row;
        sum_col += p.col;
    }
    Quadrangle out;
    out.centroid = {sum_row / 4, sum_col / 4};
    std::array<bool, 4> taken{};
    for (const auto& p : pts) {
        // exact sign test: 4*coord vs sum avoids the floored centroid
        int dr = 4 * p.row - sum_row;
        int dc = 4 * p.col - sum_col;
        if (dr == 0 || dc == 0) return std::nullopt;
        int idx = (dr > 0 ? 2 : 0) + (dc > 0 ? 1 : 0);
        if (taken[idx]) return std::nullopt;
        taken[idx] = true;
        out.points[idx] = p;
    }
    return out;
}

}  // namespace guidance
