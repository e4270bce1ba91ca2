#ifndef HARNESS_RUN_CONFIG_HPP_
#define HARNESS_RUN_CONFIG_HPP_

#include <optional>
#include <string>

#include "guidance/controller.hpp"
#include "markers/pipeline.hpp"

namespace harness {

struct RunConfig {
    std::string course_path;
    guidance::ControllerConfig controller;
    markers::PipelineConfig pipeline;
    double rate_hz = 200.0;
    int max_steps = 20000;
    std::optional<uint64_t> seed;  // overrides the course seed when set
    std::string out_dir = "out";
    // "auto" calibrates against the first gate at ref_distance before the
    // run; anything else is a reference marker file path
    std::string reference = "auto";
    double ref_distance = 0.40;
};

// Key/value run configuration file; see configs/ for examples. Throws
// simworld::ConfigError on malformed input.
RunConfig load_run_config(const std::string& path);

// Reference marker file: four "row col" lines in quadrant order.
void write_reference(const std::string& path, const guidance::ReferenceMarker& ref);
guidance::ReferenceMarker read_reference(const std::string& path);

}  // namespace harness

#endif  // HARNESS_RUN_CONFIG_HPP_
