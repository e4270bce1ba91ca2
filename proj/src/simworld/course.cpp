#include "simworld/course.hpp"

#include <fstream>
#include <sstream>

namespace simworld {

namespace {

double deg2rad(double d) { return d * M_PI / 180.0; }

PatternKind clutter_kind(const std::string& name, const std::string& path) {
    if (name == "ring") return PatternKind::ClutterRing;
    if (name == "ringdots") return PatternKind::ClutterRingDots;
    if (name == "blob") return PatternKind::ClutterBlob;
    throw ConfigError(path + ": unknown clutter kind '" + name + "'");
}

}  // namespace

Course load_course(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open course file: " + path);
    Course course;
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
        if (key == "arena") {
            if (!(ss >> course.bounds.xmin >> course.bounds.xmax >> course.bounds.ymin >>
                  course.bounds.ymax))
                throw fail("arena needs xmin xmax ymin ymax");
        } else if (key == "seed") {
            if (!(ss >> course.seed)) throw fail("seed needs an integer");
        } else if (key == "start") {
            double deg;
            if (!(ss >> course.start.x >> course.start.y >> deg))
                throw fail("start needs x y heading_deg");
            course.start.heading = deg2rad(deg);
        } else if (key == "vehicle") {
            std::string field;
            double v;
            if (!(ss >> field >> v)) throw fail("vehicle needs field value");
            if (field == "wheelbase") course.vehicle.wheelbase = v;
            else if (field == "width") course.vehicle.body_width = v;
            else if (field == "length") course.vehicle.body_length = v;
            else if (field == "rear_overhang") course.vehicle.rear_overhang = v;
            else if (field == "max_steer") course.vehicle.max_steer = v;
            else if (field == "steer_rate") course.vehicle.steer_rate = v;
            else if (field == "v_cmd") course.vehicle.v_cmd = v;
            else throw fail("unknown vehicle field '" + field + "'");
        } else if (key == "camera") {
            std::string field;
            double v;
            if (!(ss >> field >> v)) throw fail("camera needs field value");
            if (field == "f_px") course.camera.f_px = v;
            else if (field == "mount_forward") course.camera.mount_forward = v;
            else if (field == "height") course.camera.height = v;
            else throw fail("unknown camera field '" + field + "'");
        } else if (key == "render") {
            std::string field;
            if (!(ss >> field)) throw fail("render needs field value");
            if (field == "background") ss >> course.render.background;
            else if (field == "white") ss >> course.render.pattern_white;
            else if (field == "black") ss >> course.render.pattern_black;
            else if (field == "noise_sigma") ss >> course.render.noise_sigma;
            else if (field == "light_spots") {
                ss >> course.render.light_spot_count >> course.render.light_spot_rmin >>
                    course.render.light_spot_rmax >> course.render.light_spot_level;
            } else throw fail("unknown render field '" + field + "'");
            if (ss.fail()) throw fail("bad render value");
        } else if (key == "gate") {
            GatePose g;
            double deg;
            std::string kind;
            if (!(ss >> g.x >> g.y >> deg >> kind)) throw fail("gate needs x y facing_deg kind");
            g.facing = deg2rad(deg);
            if (kind == "gate") {
                g.kind = PatternKind::GateMarker;
            } else if (kind == "slalom") {
                g.kind = PatternKind::SlalomMarker;
                std::string dir;
                if (!(ss >> dir >> g.k)) throw fail("slalom gate needs dir k");
                if (dir == "L") g.turn = markers::TurnDirection::Left;
                else if (dir == "R") g.turn = markers::TurnDirection::Right;
                else throw fail("slalom dir must be L or R");
                if (g.k < 1 || g.k > 5) throw fail("slalom k must be in 1..5");
                g.board_side = 0.48;  // slalom boards are printed larger
            } else {
                throw fail("unknown gate kind '" + kind + "'");
            }
            double w, side;
            if (ss >> w) g.width = w;
            if (ss >> side) g.board_side = side;
            course.gates.push_back(g);
        } else if (key == "clutter") {
            PatternPose p;
            double deg;
            std::string kind;
            if (!(ss >> p.x >> p.y >> deg >> kind))
                throw fail("clutter needs x y normal_deg kind");
            p.normal = deg2rad(deg);
            p.kind = clutter_kind(kind, path);
            double side;
            if (ss >> side) p.board_side = side;
            course.clutter.push_back(p);
        } else {
            throw fail("unknown key '" + key + "'");
        }
    }
    for (const auto& g : course.gates) {
        if (!course.bounds.contains(g.x, g.y))
            throw ConfigError(path + ": gate outside arena bounds");
    }
    return course;
}

}  // namespace simworld
