#include "guidance/controller.hpp"

#include <cmath>

namespace guidance {

namespace {

// (col_bl + col_br) - (col_tl + col_tr): twice the horizontal offset of
// the bottom-edge midpoint from the top-edge midpoint.
int skew(const Quadrangle& q) {
    return q.points[2].col + q.points[3].col - q.points[0].col - q.points[1].col;
}

}  // namespace

ControlError compute_errors(const Quadrangle& obs, const ReferenceMarker& ref) {
    ControlError e;
    e.d = obs.centroid.col - ref.quad.centroid.col;
    e.delta = skew(obs) - skew(ref.quad);
    return e;
}

SteeringCommand steering_output(PidState& state_d, PidState& state_delta,
                                const ControllerConfig& cfg, const ControlError& err) {
    double raw = pid_step(state_d, cfg.gains_d, err.d) +
                 pid_step(state_delta, cfg.gains_delta, err.delta);
    double angle = -cfg.pixels_to_radians * raw;
    SteeringCommand cmd;
    cmd.clamped = std::abs(angle) > cfg.max_steer;
    cmd.angle = std::clamp(angle, -cfg.max_steer, cfg.max_steer);
    return cmd;
}

SteeringCommand loss_policy(const SteeringCommand& last, int frames_lost,
                            const ControllerConfig& cfg) {
    SteeringCommand cmd = last;
    cmd.clamped = false;
    if (frames_lost > cfg.hold_frames) {
        cmd.angle = last.angle * std::pow(cfg.decay, frames_lost - cfg.hold_frames);
    }
    return cmd;
}

}  // namespace guidance
