#ifndef HARNESS_DETECT_DIR_HPP_
#define HARNESS_DETECT_DIR_HPP_

#include <ostream>
#include <string>

#include "markers/pipeline.hpp"

namespace harness {

// Batch detection over a directory of PGM frames (sorted by filename,
// tracker state carried across frames). Emits one JSON record per frame:
// {"frame_id", "mode", "points" [[r,c]x4], "centroid" [r,c],
//  "elapsed_per_stage_ns" {...}}. Returns the number of frames processed.
int detect_directory(const std::string& frames_dir, const markers::PipelineConfig& cfg,
                     std::ostream& out);

}  // namespace harness

#endif  // HARNESS_DETECT_DIR_HPP_
