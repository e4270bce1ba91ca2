#ifndef SIMWORLD_COURSE_HPP_
#define SIMWORLD_COURSE_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "simworld/pattern.hpp"
#include "simworld/vehicle.hpp"

namespace simworld {

struct CameraModel {
    double f_px = 220.0;         // pinhole focal length in pixels
    double mount_forward = 0.10; // metres ahead of the rear axle
    double height = 0.12;        // metres; boards are mounted at this height
};

struct RenderOptions {
    int background = 200;
    int pattern_white = 255;
    int pattern_black = 25;
    int light_spot_count = 0;    // bright overexposure blobs per frame
    double light_spot_rmin = 1.0;
    double light_spot_rmax = 4.0;
    int light_spot_level = 255;
    double noise_sigma = 0.0;    // per-pixel additive gaussian
};

// A printed board standing in the arena. `normal` is the direction the
// printed face points; the board is one-sided.
struct PatternPose {
    double x = 0.0;
    double y = 0.0;
    double normal = 0.0;  // rad
    PatternKind kind = PatternKind::GateMarker;
    markers::TurnDirection turn = markers::TurnDirection::Left;
    int k = 1;                 // slalom small-disk count
    double board_side = 0.30;  // physical side length, metres
};

// A gate (or slalom stand) the vehicle is meant to pass. `facing` is the
// pass-through direction; the printed face points the opposite way,
// toward the approaching vehicle.
struct GatePose {
    double x = 0.0;
    double y = 0.0;
    double facing = 0.0;  // rad, travel direction
    double width = 0.36;  // m between posts
    PatternKind kind = PatternKind::GateMarker;
    markers::TurnDirection turn = markers::TurnDirection::Left;
    int k = 1;
    double board_side = 0.30;

    PatternPose pattern() const {
        return {x, y, facing + M_PI, kind, turn, k, board_side};
    }
    bool is_slalom() const { return kind == PatternKind::SlalomMarker; }
};

struct ArenaBounds {
    double xmin = 0.0, xmax = 10.0, ymin = 0.0, ymax = 10.0;
    bool contains(double x, double y) const {
        return x >= xmin && x <= xmax && y >= ymin && y <= ymax;
    }
};

struct Course {
    ArenaBounds bounds;
    std::vector<GatePose> gates;      // ordered traversal sequence
    std::vector<PatternPose> clutter; // distractor boards
    VehicleParams vehicle;
    CameraModel camera;
    RenderOptions render;
    VehicleState start;
    uint64_t seed = 1;

    std::vector<PatternPose> all_patterns() const {
        std::vector<PatternPose> out;
        out.reserve(gates.size() + clutter.size());
        for (const auto& g : gates) out.push_back(g.pattern());
        for (const auto& c : clutter) out.push_back(c);
        return out;
    }
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Line-oriented key/value course format; see courses/ for examples.
Course load_course(const std::string& path);

}  // namespace simworld

#endif  // SIMWORLD_COURSE_HPP_
