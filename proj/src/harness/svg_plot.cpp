#include "harness/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace harness {

namespace {

constexpr double kWidth = 640, kHeight = 480, kMargin = 56;

struct Range {
    double lo = 0.0, hi = 1.0;
    void include(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad(double frac) {
        double span = hi - lo;
        if (span <= 0) span = 1.0;
        lo -= frac * span;
        hi += frac * span;
    }
};

Range make_range(double lo, double hi) {
    Range r;
    r.lo = lo;
    r.hi = hi;
    if (r.hi <= r.lo) r.hi = r.lo + 1.0;
    return r;
}

class Svg {
public:
    Svg(Range x, Range y, bool flip_y, std::string title)
        : x_(x), y_(y), flip_y_(flip_y) {
        body_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
              << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
              << kHeight << "\">\n";
        body_ << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        body_ << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\""
              << kWidth - 2 * kMargin << "\" height=\"" << kHeight - 2 * kMargin
              << "\" fill=\"none\" stroke=\"black\"/>\n";
        body_ << "<text x=\"" << kWidth / 2 << "\" y=\"" << kMargin - 16
              << "\" text-anchor=\"middle\" font-size=\"14\">" << title << "</text>\n";
        axis_labels();
    }

    double px(double x) const {
        return kMargin + (x - x_.lo) / (x_.hi - x_.lo) * (kWidth - 2 * kMargin);
    }
    double py(double y) const {
        double f = (y - y_.lo) / (y_.hi - y_.lo);
        if (!flip_y_) f = 1.0 - f;
        return kMargin + f * (kHeight - 2 * kMargin);
    }

    void polyline(const std::vector<std::pair<double, double>>& pts,
                  const std::string& color, double width = 1.5) {
        if (pts.size() < 2) return;
        body_ << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
              << width << "\" points=\"";
        for (const auto& [x, y] : pts) body_ << px(x) << "," << py(y) << " ";
        body_ << "\"/>\n";
    }
    void line(double x0, double y0, double x1, double y1, const std::string& color,
              double width = 2.0) {
        body_ << "<line x1=\"" << px(x0) << "\" y1=\"" << py(y0) << "\" x2=\"" << px(x1)
              << "\" y2=\"" << py(y1) << "\" stroke=\"" << color << "\" stroke-width=\""
              << width << "\"/>\n";
    }
    void circle(double x, double y, double r_px, const std::string& color) {
        body_ << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"" << r_px
              << "\" fill=\"" << color << "\"/>\n";
    }

    void save(const std::string& path) {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open for write: " + path);
        out << body_.str() << "</svg>\n";
    }

private:
    void axis_labels() {
        for (int i = 0; i <= 4; ++i) {
            double fx = x_.lo + (x_.hi - x_.lo) * i / 4.0;
            double fy = y_.lo + (y_.hi - y_.lo) * i / 4.0;
            body_ << "<text x=\"" << px(fx) << "\" y=\"" << kHeight - kMargin + 18
                  << "\" text-anchor=\"middle\" font-size=\"11\">" << round3(fx)
                  << "</text>\n";
            body_ << "<text x=\"" << kMargin - 8 << "\" y=\"" << py(fy) + 4
                  << "\" text-anchor=\"end\" font-size=\"11\">" << round3(fy)
                  << "</text>\n";
        }
    }
    static std::string round3(double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3g", v);
        return buf;
    }

    Range x_, y_;
    bool flip_y_;
    std::ostringstream body_;
};

}  // namespace

void plot_trajectory_world(const std::vector<TrajectoryRecord>& records,
                           const simworld::Course* course, const std::string& path) {
    Range rx = make_range(0, 1), ry = make_range(0, 1);
    if (course) {
        rx = make_range(course->bounds.xmin, course->bounds.xmax);
        ry = make_range(course->bounds.ymin, course->bounds.ymax);
    } else if (!records.empty()) {
        rx = make_range(records[0].x, records[0].x);
        ry = make_range(records[0].y, records[0].y);
        for (const auto& r : records) {
            rx.include(r.x);
            ry.include(r.y);
        }
        rx.pad(0.05);
        ry.pad(0.05);
    }
    Svg svg(rx, ry, false, "trajectory");
    if (course) {
        for (const auto& g : course->gates) {
            const double pxd = -std::sin(g.facing), pyd = std::cos(g.facing);
            const double hw = g.width / 2.0;
            svg.line(g.x - hw * pxd, g.y - hw * pyd, g.x + hw * pxd, g.y + hw * pyd,
                     "seagreen", 3.0);
            svg.circle(g.x - hw * pxd, g.y - hw * pyd, 3.0, "darkgreen");
            svg.circle(g.x + hw * pxd, g.y + hw * pyd, 3.0, "darkgreen");
            svg.line(g.x, g.y, g.x + 0.25 * std::cos(g.facing), g.y + 0.25 * std::sin(g.facing),
                     "darkgreen", 1.0);
        }
        for (const auto& c : course->clutter) svg.circle(c.x, c.y, 2.5, "gray");
    }
    std::vector<std::pair<double, double>> pts;
    pts.reserve(records.size());
    for (const auto& r : records) pts.emplace_back(r.x, r.y);
    svg.polyline(pts, "royalblue");
    svg.save(path);
}

void plot_velocity(const std::vector<TrajectoryRecord>& records, const std::string& path) {
    Range rt = make_range(0, 1), rv = make_range(0, 1);
    if (!records.empty()) {
        rt = make_range(0, records.back().t);
        rv = make_range(0, 0);
        for (const auto& r : records) rv.include(r.v);
        rv.pad(0.1);
    }
    Svg svg(rt, rv, false, "velocity [m/s]");
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : records) pts.emplace_back(r.t, r.v);
    svg.polyline(pts, "firebrick");
    svg.save(path);
}

void plot_steering(const std::vector<TrajectoryRecord>& records, const std::string& path) {
    Range rt = make_range(0, 1), rs = make_range(-0.5, 0.5);
    if (!records.empty()) {
        rt = make_range(0, records.back().t);
        for (const auto& r : records) rs.include(r.steer);
        rs.pad(0.1);
    }
    Svg svg(rt, rs, false, "steering angle [rad]");
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : records) pts.emplace_back(r.t, r.steer);
    svg.polyline(pts, "darkorange");
    svg.line(rt.lo, 0.0, rt.hi, 0.0, "lightgray", 1.0);
    svg.save(path);
}

void plot_image_plane(const std::vector<TrajectoryRecord>& records, const std::string& path) {
    Svg svg(make_range(0, 256), make_range(0, 256), true, "disk tracks (image plane)");
    const char* colors[4] = {"royalblue", "firebrick", "seagreen", "darkorange"};
    for (int disk = 0; disk < 4; ++disk) {
        std::vector<std::pair<double, double>> chunk;
        for (const auto& r : records) {
            int row = r.points[2 * disk], col = r.points[2 * disk + 1];
            if (row < 0) {
                svg.polyline(chunk, colors[disk], 1.0);
                chunk.clear();
            } else {
                chunk.emplace_back(col, row);
            }
        }
        svg.polyline(chunk, colors[disk], 1.0);
    }
    svg.save(path);
}

void plot_all(const std::vector<TrajectoryRecord>& records, const simworld::Course* course,
              const std::string& out_dir) {
    plot_trajectory_world(records, course, out_dir + "/trajectory.svg");
    plot_velocity(records, out_dir + "/velocity.svg");
    plot_steering(records, out_dir + "/steering.svg");
    plot_image_plane(records, out_dir + "/image_plane.svg");
}

}  // namespace harness
