#ifndef GUIDANCE_PID_HPP_
#define GUIDANCE_PID_HPP_

#include <algorithm>
#include <limits>

namespace guidance {

struct PidGains {
    double kp = 0.0;
    double ki = 0.0;
    double kd = 0.0;
};

struct PidState {
    double integral = 0.0;
    double prev_error = 0.0;
    // anti-windup bound on the accumulated error
    double integral_clamp = std::numeric_limits<double>::infinity();

    void reset() {
        integral = 0.0;
        prev_error = 0.0;
    }
};

// Discrete unit-step PID: kp*e + ki*sum(e) + kd*(e - e_prev). The sum
// includes the current error and is clamped; no dt factor (the gains
// absorb the control rate).
inline double pid_step(PidState& state, const PidGains& gains, double e) {
    state.integral = std::clamp(state.integral + e, -state.integral_clamp,
                                state.integral_clamp);
    double out = gains.kp * e + gains.ki * state.integral +
                 gains.kd * (e - state.prev_error);
    state.prev_error = e;
    return out;
}

}  // namespace guidance

#endif  // GUIDANCE_PID_HPP_
