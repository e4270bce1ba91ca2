#include "simworld/vehicle.hpp"

#include <algorithm>
#include <cmath>

namespace simworld {

VehicleState step_vehicle(const VehicleState& state, const guidance::SteeringCommand& cmd,
                          double dt, const VehicleParams& params) {
    VehicleState next = state;
    double target = std::clamp(cmd.angle, -params.max_steer, params.max_steer);
    double max_delta = params.steer_rate * dt;
    next.steer = state.steer + std::clamp(target - state.steer, -max_delta, max_delta);
    next.speed = params.v_cmd;
    next.x = state.x + next.speed * std::cos(state.heading) * dt;
    next.y = state.y + next.speed * std::sin(state.heading) * dt;
    next.heading = state.heading + next.speed / params.wheelbase * std::tan(next.steer) * dt;
    return next;
}

}  // namespace simworld
