#include "simworld/render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace simworld {

namespace {

constexpr double kNearClip = 0.05;
constexpr double kHalfImage = ppa::kSize / 2.0;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

struct Frame3 {
    Vec3 origin;
    Vec3 fwd;    // optical axis
    Vec3 right;  // +image column
    Vec3 down;   // +image row
};

Frame3 make_frame(const CameraPose& cam) {
    Frame3 f;
    f.origin = {cam.x, cam.y, cam.z};
    f.fwd = {std::cos(cam.heading), std::sin(cam.heading), 0.0};
    f.right = {std::sin(cam.heading), -std::cos(cam.heading), 0.0};
    f.down = {0.0, 0.0, -1.0};
    return f;
}

}  // namespace

CameraPose camera_pose(const VehicleState& vehicle, const CameraModel& camera) {
    CameraPose cam;
    cam.x = vehicle.x + camera.mount_forward * std::cos(vehicle.heading);
    cam.y = vehicle.y + camera.mount_forward * std::sin(vehicle.heading);
    cam.z = camera.height;
    cam.heading = vehicle.heading;
    return cam;
}

ImagePoint project_point(const CameraPose& cam, const CameraModel& model, double wx,
                         double wy, double wz, bool* in_front) {
    Frame3 f = make_frame(cam);
    Vec3 rel = Vec3{wx, wy, wz} - f.origin;
    double zc = dot(rel, f.fwd);
    if (in_front) *in_front = zc > kNearClip;
    double inv = zc > kNearClip ? 1.0 / zc : 0.0;
    return {kHalfImage + model.f_px * dot(rel, f.down) * inv,
            kHalfImage + model.f_px * dot(rel, f.right) * inv};
}

RenderResult render(const Course& course, const VehicleState& vehicle,
                    const CameraModel& camera, const RenderOptions& opts, Rng& rng) {
    RenderResult out;
    out.frame.fill(static_cast<uint8_t>(opts.background));

    const CameraPose cam = camera_pose(vehicle, camera);
    const Frame3 f = make_frame(cam);
    std::vector<float> depth(ppa::kPixelCount, std::numeric_limits<float>::infinity());

    const std::vector<PatternPose> patterns = course.all_patterns();
    for (size_t pi = 0; pi < patterns.size(); ++pi) {
        const PatternPose& pat = patterns[pi];
        const double half = pat.board_side / 2.0;
        const Vec3 centre{pat.x, pat.y, camera.height};
        const Vec3 normal{std::cos(pat.normal), std::sin(pat.normal), 0.0};
        const Vec3 board_u{-normal.y, normal.x, 0.0};  // +u is image right from the front
        const Vec3 board_v{0.0, 0.0, 1.0};

        PatternTruth truth;
        truth.pattern_id = static_cast<int>(pi);
        truth.kind = pat.kind;
        Vec3 to_cam = f.origin - centre;
        truth.distance = std::hypot(to_cam.x, to_cam.y);
        truth.front_side = dot(to_cam, normal) > kNearClip;

        // ground-truth projections for the oracle interface
        truth.disks_in_frame = truth.front_side;
        auto project_board = [&](double s, double h, int slot) {
            bool ok = false;
            Vec3 p = centre + s * board_u + h * board_v;
            truth.disks[slot] = project_point(cam, camera, p.x, p.y, p.z, &ok);
            if (!ok || truth.disks[slot].row < 0 || truth.disks[slot].row >= ppa::kSize ||
                truth.disks[slot].col < 0 || truth.disks[slot].col >= ppa::kSize) {
                truth.disks_in_frame = false;
            }
        };
        if (pat.kind == PatternKind::GateMarker || pat.kind == PatternKind::ClutterRingDots) {
            auto centres = gate_disk_centres(half);
            for (int i = 0; i < 4; ++i) project_board(centres[i][0], centres[i][1], i);
        } else if (pat.kind == PatternKind::SlalomMarker) {
            double flip = pat.turn == markers::TurnDirection::Left ? -1.0 : 1.0;
            project_board(flip * layout::kAnchorOffset * half, 0.0, 0);
        }
        out.truth.push_back(truth);

        if (!truth.front_side) continue;

        // image bounding box of the board corners
        double rmin = std::numeric_limits<double>::infinity(), rmax = -rmin;
        double cmin = rmin, cmax = -rmin;
        bool clipped = false;
        for (double su : {-1.0, 1.0}) {
            for (double sv : {-1.0, 1.0}) {
                Vec3 corner = centre + (su * half) * board_u + (sv * half) * board_v;
                bool ok = false;
                ImagePoint ip = project_point(cam, camera, corner.x, corner.y, corner.z, &ok);
                if (!ok) {
                    clipped = true;
                    continue;
                }
                rmin = std::min(rmin, ip.row);
                rmax = std::max(rmax, ip.row);
                cmin = std::min(cmin, ip.col);
                cmax = std::max(cmax, ip.col);
            }
        }
        if (clipped) {
            rmin = cmin = 0.0;
            rmax = cmax = ppa::kSize;
        }
        int r0 = std::max(0, static_cast<int>(std::floor(rmin)));
        int r1 = std::min(ppa::kSize - 1, static_cast<int>(std::ceil(rmax)));
        int c0 = std::max(0, static_cast<int>(std::floor(cmin)));
        int c1 = std::min(ppa::kSize - 1, static_cast<int>(std::ceil(cmax)));
        if (r0 > r1 || c0 > c1) continue;

        const double denom_centre = dot(centre - f.origin, normal);
        for (int r = r0; r <= r1; ++r) {
            for (int c = c0; c <= c1; ++c) {
                double u = (c + 0.5 - kHalfImage) / camera.f_px;
                double v = (r + 0.5 - kHalfImage) / camera.f_px;
                Vec3 dir = f.fwd + u * f.right + v * f.down;
                double dn = dot(dir, normal);
                if (std::abs(dn) < 1e-12) continue;
                double t = denom_centre / dn;
                if (t <= kNearClip) continue;
                float& zref = depth[r * ppa::kSize + c];
                if (t >= zref) continue;
                Vec3 hit = f.origin + t * dir;
                Vec3 rel = hit - centre;
                Paint paint = sample_pattern(pat.kind, pat.turn, pat.k, half,
                                             dot(rel, board_u), dot(rel, board_v));
                if (paint == Paint::Outside) continue;
                zref = static_cast<float>(t);
                out.frame.at(r, c) = static_cast<uint8_t>(
                    paint == Paint::Black ? opts.pattern_black : opts.pattern_white);
            }
        }
    }

    // overexposure spots (drawn over everything, like real blown pixels)
    for (int i = 0; i < opts.light_spot_count; ++i) {
        double cy = rng.uniform(0.0, ppa::kSize);
        double cx = rng.uniform(0.0, ppa::kSize);
        double ry = rng.uniform(opts.light_spot_rmin, opts.light_spot_rmax);
        double rx = rng.uniform(opts.light_spot_rmin, opts.light_spot_rmax);
        int r0 = std::max(0, static_cast<int>(cy - ry - 1));
        int r1 = std::min(ppa::kSize - 1, static_cast<int>(cy + ry + 1));
        int c0 = std::max(0, static_cast<int>(cx - rx - 1));
        int c1 = std::min(ppa::kSize - 1, static_cast<int>(cx + rx + 1));
        for (int r = r0; r <= r1; ++r) {
            for (int c = c0; c <= c1; ++c) {
                double dy = (r + 0.5 - cy) / ry;
                double dx = (c + 0.5 - cx) / rx;
                if (dy * dy + dx * dx <= 1.0) {
                    out.frame.at(r, c) = static_cast<uint8_t>(opts.light_spot_level);
                }
            }
        }
    }

    if (opts.noise_sigma > 0.0) {
        uint8_t* px = out.frame.data();
        for (int i = 0; i < ppa::kPixelCount; ++i) {
            double v = px[i] + rng.gaussian(0.0, opts.noise_sigma);
            px[i] = static_cast<uint8_t>(std::clamp(v, 0.0, 255.0));
        }
    }
    return out;
}

}  // namespace simworld
