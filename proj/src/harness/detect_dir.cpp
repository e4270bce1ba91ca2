#include "harness/detect_dir.hpp"

#include <algorithm>
#include <filesystem>

#include "json.hpp"
#include "ppa/image_io.hpp"

namespace harness {

int detect_directory(const std::string& frames_dir, const markers::PipelineConfig& cfg,
                     std::ostream& out) {
    namespace fs = std::filesystem;
    std::vector<std::string> paths;
    for (const auto& entry : fs::directory_iterator(frames_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".pgm") {
            paths.push_back(entry.path().string());
        }
    }
    std::sort(paths.begin(), paths.end());

    markers::TrackerState tracker;
    uint64_t frame_id = 0;
    for (const auto& path : paths) {
        ppa::GreyImage frame = ppa::read_pgm(path);
        markers::DetectResult det = markers::detect_disks(frame, cfg, tracker, frame_id);

        nlohmann::json j;
        j["frame_id"] = frame_id;
        j["file"] = fs::path(path).filename().string();
        switch (det.status) {
            case markers::DetectStatus::Direct: j["mode"] = "Direct"; break;
            case markers::DetectStatus::Fallback: j["mode"] = "Fallback"; break;
            case markers::DetectStatus::NoTarget: j["mode"] = "NoTarget"; break;
            case markers::DetectStatus::Degenerate: j["mode"] = "Degenerate"; break;
        }
        if (det.found()) {
            auto points = nlohmann::json::array();
            for (const auto& p : det.observation->quad.points) {
                points.push_back({p.row, p.col});
            }
            j["points"] = points;
            j["centroid"] = {det.observation->quad.centroid.row,
                             det.observation->quad.centroid.col};
        }
        j["elapsed_per_stage_ns"] = {{"threshold", det.timing.threshold_ns},
                                     {"flooding", det.timing.flooding_ns},
                                     {"denoise", det.timing.denoise_ns},
                                     {"centroid_scan", det.timing.centroid_ns}};
        out << j.dump() << "\n";
        ++frame_id;
    }
    return static_cast<int>(frame_id);
}

}  // namespace harness
