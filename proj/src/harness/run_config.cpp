#include "harness/run_config.hpp"

#include <fstream>
#include <sstream>

#include "simworld/course.hpp"

namespace harness {

using simworld::ConfigError;

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open run config: " + path);
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string key;
        if (!(ss >> key)) continue;
        auto fail = [&](const std::string& why) -> ConfigError {
            return ConfigError(path + ":" + std::to_string(lineno) + ": " + why);
        };
        if (key == "course") ss >> cfg.course_path;
        else if (key == "rate_hz") ss >> cfg.rate_hz;
        else if (key == "max_steps") ss >> cfg.max_steps;
        else if (key == "seed") { uint64_t s; ss >> s; cfg.seed = s; }
        else if (key == "out_dir") ss >> cfg.out_dir;
        else if (key == "reference") ss >> cfg.reference;
        else if (key == "ref_distance") ss >> cfg.ref_distance;
        else if (key == "gains_d")
            ss >> cfg.controller.gains_d.kp >> cfg.controller.gains_d.ki >>
                cfg.controller.gains_d.kd;
        else if (key == "gains_delta")
            ss >> cfg.controller.gains_delta.kp >> cfg.controller.gains_delta.ki >>
                cfg.controller.gains_delta.kd;
        else if (key == "pixels_to_radians") ss >> cfg.controller.pixels_to_radians;
        else if (key == "max_steer") ss >> cfg.controller.max_steer;
        else if (key == "hold_frames") ss >> cfg.controller.hold_frames;
        else if (key == "decay") ss >> cfg.controller.decay;
        else if (key == "search_after") ss >> cfg.controller.search_after_frames;
        else if (key == "search_steer") ss >> cfg.controller.search_steer;
        else if (key == "threshold") ss >> cfg.pipeline.threshold_level;
        else if (key == "flood_steps") ss >> cfg.pipeline.flood_steps;
        else if (key == "p_step") ss >> cfg.pipeline.p_step;
        else if (key == "disc_num") ss >> cfg.pipeline.disc_num;
        else if (key == "min_disk_area") ss >> cfg.pipeline.min_disk_area;
        else if (key == "loss_patience") ss >> cfg.pipeline.loss_patience;
        else throw fail("unknown key '" + key + "'");
        if (ss.fail()) throw fail("bad value for '" + key + "'");
    }
    if (cfg.course_path.empty()) throw ConfigError(path + ": missing 'course'");
    if (cfg.rate_hz <= 0) throw ConfigError(path + ": control rate must be > 0");
    if (cfg.pipeline.disc_num != 4)
        throw ConfigError(path + ": disc_num must be 4 (quadrant correspondence)");
    return cfg;
}

void write_reference(const std::string& path, const guidance::ReferenceMarker& ref) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open for write: " + path);
    for (const auto& p : ref.quad.points) out << p.row << " " << p.col << "\n";
    if (!out) throw ConfigError("write failed: " + path);
}

guidance::ReferenceMarker read_reference(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open reference file: " + path);
    std::array<ppa::PixelCoord, 4> pts;
    for (auto& p : pts) {
        if (!(in >> p.row >> p.col)) throw ConfigError("malformed reference: " + path);
    }
    auto ordered = guidance::order_by_quadrant(pts);
    if (!ordered) throw ConfigError("reference points are degenerate: " + path);
    // loaded points must already be in quadrant order
    if (ordered->points != pts) throw ConfigError("reference not quadrant-ordered: " + path);
    return guidance::ReferenceMarker{*ordered};
}

}  // namespace harness
