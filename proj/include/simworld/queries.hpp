#ifndef SIMWORLD_QUERIES_HPP_
#define SIMWORLD_QUERIES_HPP_

#include "simworld/course.hpp"

namespace simworld {

// True iff the vehicle reference point (rear axle) crossed the gate's
// post-to-post segment moving along the gate facing during this step.
bool gate_passed(const VehicleState& prev, const VehicleState& cur, const GatePose& gate);

// True iff the vehicle body rectangle intersects any gate post or
// marker/clutter stand footprint.
bool collision(const VehicleState& cur, const Course& course, const VehicleParams& params);

// Obstacle footprints (circles) of the course: gate posts and board stands.
struct Footprint {
    double x = 0.0, y = 0.0, radius = 0.0;
};
std::vector<Footprint> course_footprints(const Course& course);

}  // namespace simworld

#endif  // SIMWORLD_QUERIES_HPP_
