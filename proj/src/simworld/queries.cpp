#include "simworld/queries.hpp"

#include <algorithm>
#include <cmath>

namespace simworld {

namespace {

constexpr double kPostRadius = 0.02;
constexpr double kStandRadius = 0.05;

double cross2(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

}  // namespace

bool gate_passed(const VehicleState& prev, const VehicleState& cur, const GatePose& gate) {
    // segment AB: the step; segment CD: the gate opening between posts
    const double ax = prev.x, ay = prev.y, bx = cur.x, by = cur.y;
    const double px = -std::sin(gate.facing), py = std::cos(gate.facing);
    const double hw = gate.width / 2.0;
    const double cx = gate.x + hw * px, cy = gate.y + hw * py;
    const double dx = gate.x - hw * px, dy = gate.y - hw * py;

    const double d1 = cross2(dx - cx, dy - cy, ax - cx, ay - cy);
    const double d2 = cross2(dx - cx, dy - cy, bx - cx, by - cy);
    const double d3 = cross2(bx - ax, by - ay, cx - ax, cy - ay);
    const double d4 = cross2(bx - ax, by - ay, dx - ax, dy - ay);
    if (!((d1 > 0) != (d2 > 0) && (d3 > 0) != (d4 > 0))) return false;

    const double fwd = (bx - ax) * std::cos(gate.facing) + (by - ay) * std::sin(gate.facing);
    return fwd > 0.0;
}

std::vector<Footprint> course_footprints(const Course& course) {
    std::vector<Footprint> out;
    for (const auto& g : course.gates) {
        if (g.is_slalom()) {
            out.push_back({g.x, g.y, kStandRadius});
        } else {
            const double px = -std::sin(g.facing), py = std::cos(g.facing);
            const double hw = g.width / 2.0;
            out.push_back({g.x + hw * px, g.y + hw * py, kPostRadius});
            out.push_back({g.x - hw * px, g.y - hw * py, kPostRadius});
        }
    }
    for (const auto& c : course.clutter) out.push_back({c.x, c.y, kStandRadius});
    return out;
}

bool collision(const VehicleState& cur, const Course& course, const VehicleParams& params) {
    // body rectangle centre sits ahead of the rear axle
    const double fx = std::cos(cur.heading), fy = std::sin(cur.heading);
    const double cxb = cur.x + (params.body_length / 2.0 - params.rear_overhang) * fx;
    const double cyb = cur.y + (params.body_length / 2.0 - params.rear_overhang) * fy;
    const double half_len = params.body_length / 2.0;
    const double half_wid = params.body_width / 2.0;

    for (const Footprint& fp : course_footprints(course)) {
        const double rx = fp.x - cxb, ry = fp.y - cyb;
        const double local_x = std::abs(rx * fx + ry * fy);
        const double local_y = std::abs(-rx * fy + ry * fx);
        const double ex = std::max(local_x - half_len, 0.0);
        const double ey = std::max(local_y - half_wid, 0.0);
        if (ex * ex + ey * ey <= fp.radius * fp.radius) return true;
    }
    return false;
}

}  // namespace simworld
