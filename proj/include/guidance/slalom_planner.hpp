#ifndef GUIDANCE_SLALOM_PLANNER_HPP_
#define GUIDANCE_SLALOM_PLANNER_HPP_

#include <optional>

#include "guidance/controller.hpp"
#include "markers/slalom.hpp"

namespace guidance {

struct SlalomPlannerConfig {
    double trigger_range = 0.80;   // turn once the marker is this close
    double turn_steer = 0.35;      // rad held during the commanded turn
    double centering_gain = 0.004; // rad per pixel while approaching
    double recover_steer = 0.14;   // counter-steer while hunting the next marker
    int recover_grace_frames = 10; // straight frames right after a turn
    int recover_timeout_frames = 400;
    int approach_patience = 30;    // decode misses tolerated mid-approach
    double max_steer = 0.45;
    double decay = 0.9;
    // vehicle characteristics, used to predict how much extra heading
    // accumulates while the servo swings back to centre after a turn
    double wheelbase = 0.26;
    double steer_rate = 6.0;
    double speed = 3.88;
};

// Weave scheduler: centre the marker until it is trigger_range away, hold
// a fixed-rate turn through the commanded angle, then hunt for the next
// marker with a gentle counter-steer.
class SlalomPlanner {
public:
    enum class Phase { Search, Approach, Turn, Recover };

    explicit SlalomPlanner(const SlalomPlannerConfig& cfg) : cfg_(cfg) {}

    SteeringCommand update(const std::optional<markers::SlalomCommand>& cmd,
                           double heading);

    Phase phase() const { return phase_; }
    int turns_completed() const { return turns_completed_; }

private:
    SteeringCommand approach(const markers::SlalomCommand& cmd, double heading);
    SteeringCommand decayed();

    SlalomPlannerConfig cfg_;
    Phase phase_ = Phase::Search;
    SteeringCommand last_{};
    int frames_lost_ = 0;
    int recover_frames_ = 0;
    int turns_completed_ = 0;
    double turn_sign_ = 1.0;
    double turn_target_ = 0.0;  // rad of heading change to accumulate
    double turned_ = 0.0;
    double prev_heading_ = 0.0;
};

}  // namespace guidance

#endif  // GUIDANCE_SLALOM_PLANNER_HPP_
