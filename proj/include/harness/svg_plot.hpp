#ifndef HARNESS_SVG_PLOT_HPP_
#define HARNESS_SVG_PLOT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "harness/trajectory.hpp"
#include "simworld/course.hpp"

namespace harness {

// Standalone SVG plots emitted with hand-rolled primitives (no plotting
// dependency). Empty record sets produce valid empty-axes documents.
void plot_trajectory_world(const std::vector<TrajectoryRecord>& records,
                           const simworld::Course* course, const std::string& path);
void plot_velocity(const std::vector<TrajectoryRecord>& records, const std::string& path);
void plot_steering(const std::vector<TrajectoryRecord>& records, const std::string& path);
void plot_image_plane(const std::vector<TrajectoryRecord>& records, const std::string& path);

// Writes trajectory.svg, velocity.svg, steering.svg, image_plane.svg.
void plot_all(const std::vector<TrajectoryRecord>& records, const simworld::Course* course,
              const std::string& out_dir);

}  // namespace harness

#endif  // HARNESS_SVG_PLOT_HPP_
