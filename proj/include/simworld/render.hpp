#ifndef SIMWORLD_RENDER_HPP_
#define SIMWORLD_RENDER_HPP_

#include <array>
#include <vector>

#include "ppa/grey_image.hpp"
#include "simworld/course.hpp"
#include "simworld/rng.hpp"

namespace simworld {

// Continuous image coordinates: pixel (r, c) covers [r,r+1) x [c,c+1), so
// a point at (r+0.5, c+0.5) is that pixel's centre.
struct ImagePoint {
    double row = 0.0;
    double col = 0.0;
};

// Per-pattern ground truth attached to a rendered frame; test interface
// for oracle checks, not sensor output.
struct PatternTruth {
    int pattern_id = -1;  // index into course.all_patterns()
    PatternKind kind = PatternKind::GateMarker;
    double distance = 0.0;  // camera to board centre, metres
    bool front_side = false;
    std::array<ImagePoint, 4> disks{};  // gate disks (quadrant order) or
                                        // [0]=anchor for slalom markers
    bool disks_in_frame = false;
};

struct RenderResult {
    ppa::GreyImage frame;
    std::vector<PatternTruth> truth;
};

// World-space camera pose derived from the vehicle pose.
struct CameraPose {
    double x = 0.0, y = 0.0, z = 0.0;
    double heading = 0.0;
};

CameraPose camera_pose(const VehicleState& vehicle, const CameraModel& camera);

ImagePoint project_point(const CameraPose& cam, const CameraModel& model, double wx,
                         double wy, double wz, bool* in_front = nullptr);

// Pinhole-projects every front-facing board into a 256x256 frame
// (nearest pattern wins on overlap), then applies overexposure spots and
// per-pixel noise from `rng`.
RenderResult render(const Course& course, const VehicleState& vehicle,
                    const CameraModel& camera, const RenderOptions& opts, Rng& rng);

}  // namespace simworld

#endif  // SIMWORLD_RENDER_HPP_
