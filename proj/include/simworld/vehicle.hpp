#ifndef SIMWORLD_VEHICLE_HPP_
#define SIMWORLD_VEHICLE_HPP_

#include "guidance/controller.hpp"

namespace simworld {

// Planar pose of the car-like rover; position is the rear-axle point.
struct VehicleState {
    double x = 0.0;      // m, world frame
    double y = 0.0;      // m
    double heading = 0.0;  // rad, CCW from +x
    double steer = 0.0;    // rad, front wheel angle, positive = left
    double speed = 0.0;    // m/s
};

struct VehicleParams {
    double wheelbase = 0.26;    // m
    double body_width = 0.18;   // m
    double body_length = 0.34;  // m, bumper to bumper
    double rear_overhang = 0.04;  // m behind the rear axle
    double max_steer = 0.45;    // rad
    double steer_rate = 6.0;    // rad/s servo slew limit
    double v_cmd = 2.2;         // m/s, held constant
};

// Kinematic bicycle step: the steering servo slews toward the command,
// then the pose integrates forward at the commanded speed.
VehicleState step_vehicle(const VehicleState& state, const guidance::SteeringCommand& cmd,
                          double dt, const VehicleParams& params);

}  // namespace simworld

#endif  // SIMWORLD_VEHICLE_HPP_
