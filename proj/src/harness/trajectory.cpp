#include "harness/trajectory.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace harness {

namespace {
const char* kHeader =
    "t,x,y,theta,v,steer,d,delta,mode,gate_index,"
    "p0r,p0c,p1r,p1c,p2r,p2c,p3r,p3c";
}

const char* to_string(StepMode m) {
    switch (m) {
        case StepMode::Direct: return "Direct";
        case StepMode::Fallback: return "Fallback";
        case StepMode::Lost: return "Lost";
    }
    return "Lost";
}

StepMode step_mode_from_string(const std::string& s) {
    if (s == "Direct") return StepMode::Direct;
    if (s == "Fallback") return StepMode::Fallback;
    if (s == "Lost") return StepMode::Lost;
    throw std::runtime_error("unknown trajectory mode: " + s);
}

void write_trajectory(const std::string& path, const std::vector<TrajectoryRecord>& records) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for write: " + path);
    out << kHeader << "\n";
    char buf[512];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof(buf),
                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%s,%d,"
                      "%d,%d,%d,%d,%d,%d,%d,%d",
                      r.t, r.x, r.y, r.theta, r.v, r.steer, r.d, r.delta,
                      to_string(r.mode), r.gate_index, r.points[0], r.points[1],
                      r.points[2], r.points[3], r.points[4], r.points[5], r.points[6],
                      r.points[7]);
        out << buf << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<TrajectoryRecord> read_trajectory(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string line;
    if (!std::getline(in, line) || line != kHeader) {
        throw std::runtime_error("bad trajectory header in " + path);
    }
    std::vector<TrajectoryRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string field;
        auto next = [&]() -> std::string {
            if (!std::getline(ss, field, ',')) {
                throw std::runtime_error("short trajectory row in " + path);
            }
            return field;
        };
        TrajectoryRecord r;
        r.t = std::stod(next());
        r.x = std::stod(next());
        r.y = std::stod(next());
        r.theta = std::stod(next());
        r.v = std::stod(next());
        r.steer = std::stod(next());
        r.d = std::stod(next());
        r.delta = std::stod(next());
        r.mode = step_mode_from_string(next());
        r.gate_index = std::stoi(next());
        for (int i = 0; i < 8; ++i) r.points[i] = std::stoi(next());
        records.push_back(r);
    }
    return records;
}

}  // namespace harness
