#include "guidance/slalom_planner.hpp"

#include <cmath>

namespace guidance {

namespace {
double wrap_pi(double a) { return std::remainder(a, 2.0 * M_PI); }
}  // namespace

SteeringCommand SlalomPlanner::decayed() {
    SteeringCommand cmd = last_;
    cmd.angle *= std::pow(cfg_.decay, frames_lost_);
    return cmd;
}

SteeringCommand SlalomPlanner::approach(const markers::SlalomCommand& cmd, double heading) {
    frames_lost_ = 0;
    if (cmd.range_m <= cfg_.trigger_range) {
        phase_ = Phase::Turn;
        turn_sign_ = cmd.direction == markers::TurnDirection::Left ? 1.0 : -1.0;
        turn_target_ = cmd.angle_deg * M_PI / 180.0;
        turned_ = 0.0;
        prev_heading_ = heading;
        ++turns_completed_;
        last_ = {turn_sign_ * cfg_.turn_steer, false};
        return last_;
    }
    double err_px = cmd.centroid.col + 0.5 - ppa::kSize / 2.0;
    double angle = std::clamp(-cfg_.centering_gain * err_px, -cfg_.max_steer, cfg_.max_steer);
    last_ = {angle, false};
    return last_;
}

SteeringCommand SlalomPlanner::update(const std::optional<markers::SlalomCommand>& cmd,
                                      double heading) {
    switch (phase_) {
        case Phase::Search:
            if (cmd) {
                phase_ = Phase::Approach;
                return approach(*cmd, heading);
            }
            ++frames_lost_;
            return decayed();

        case Phase::Approach:
            if (cmd) return approach(*cmd, heading);
            ++frames_lost_;
            if (frames_lost_ > cfg_.approach_patience) phase_ = Phase::Search;
            return decayed();

        case Phase::Turn: {
            turned_ += wrap_pi(heading - prev_heading_);
            prev_heading_ = heading;
            // stop early by the heading the vehicle will add while the
            // servo swings back to centre
            double release = 0.5 * (cfg_.speed / cfg_.wheelbase) *
                             std::tan(cfg_.turn_steer) * (cfg_.turn_steer / cfg_.steer_rate);
            if (std::abs(turned_) >= turn_target_ - release) {
                phase_ = Phase::Recover;
                recover_frames_ = 0;
                last_ = {0.0, false};
                return last_;
            }
            last_ = {turn_sign_ * cfg_.turn_steer, false};
            return last_;
        }

        case Phase::Recover:
            if (cmd) {
                phase_ = Phase::Approach;
                return approach(*cmd, heading);
            }
            ++recover_frames_;
            if (recover_frames_ > cfg_.recover_timeout_frames) {
                phase_ = Phase::Search;
                frames_lost_ = 0;
                last_ = {0.0, false};
                return last_;
            }
            if (recover_frames_ <= cfg_.recover_grace_frames) {
                last_ = {0.0, false};
                return last_;
            }
            // swing back toward the line of markers
            last_ = {-turn_sign_ * cfg_.recover_steer, false};
            return last_;
    }
    return {0.0, false};
}

}  // namespace guidance
