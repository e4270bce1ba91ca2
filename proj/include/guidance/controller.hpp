#ifndef GUIDANCE_CONTROLLER_HPP_
#define GUIDANCE_CONTROLLER_HPP_

#include "guidance/pid.hpp"
#include "guidance/quadrant.hpp"

namespace guidance {

// The two error channels feeding the dual PID: d is the horizontal offset
// of the observed centroid from the reference, delta the skew of the
// bottom-edge midpoint against the top-edge midpoint (relative to the
// reference's own skew). Both in pixels, signed.
struct ControlError {
    double d = 0.0;
    double delta = 0.0;
};

ControlError compute_errors(const Quadrangle& obs, const ReferenceMarker& ref);

// Steering angle in radians, positive = left. `clamped` is set when the
// raw output exceeded the limit.
struct SteeringCommand {
    double angle = 0.0;
    bool clamped = false;
};

struct ControllerConfig {
    PidGains gains_d{0.006, 0.0, 0.002};
    PidGains gains_delta{0.003, 0.0, 0.001};
    // conversion from summed PID output (pixels) to steering radians; the
    // gains absorb the scale by default
    double pixels_to_radians = 1.0;
    double max_steer = 0.45;
    // target-loss behaviour: hold the last command, then decay it
    int hold_frames = 10;
    double decay = 0.9;
    // acquisition sweep used by the run loop after the decay phase: a
    // gentle fixed-curvature turn until a pattern is found again
    int search_after_frames = 50;
    double search_steer = 0.22;
};

// Output = pid(d) + pid(delta), converted to a steering angle. A pattern
// offset to the right (positive d) must steer the vehicle right, which is
// a negative angle under the positive-left convention, hence the negated
// scale.
SteeringCommand steering_output(PidState& state_d, PidState& state_delta,
                                const ControllerConfig& cfg, const ControlError& err);

// No-detection policy: hold the last command for cfg.hold_frames frames,
// then decay the angle geometrically toward zero.
SteeringCommand loss_policy(const SteeringCommand& last, int frames_lost,
                            const ControllerConfig& cfg);

}  // namespace guidance

#endif  // GUIDANCE_CONTROLLER_HPP_
