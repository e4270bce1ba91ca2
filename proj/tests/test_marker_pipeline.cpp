#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "markers/components.hpp"
#include "markers/pipeline.hpp"
#include "markers/slalom.hpp"
#include "oracles.hpp"
#include "simworld/render.hpp"
#include "synthetic.hpp"

using namespace markers;
using ppa::BitImage;
using ppa::GreyImage;
using ppa::PixelCoord;

namespace {

simworld::Course single_gate_course(double gate_x) {
    simworld::Course course;
    course.bounds = {-5, 20, -5, 5};
    simworld::GatePose gate;
    gate.x = gate_x;
    gate.y = 0.0;
    gate.facing = 0.0;
    course.gates.push_back(gate);
    return course;
}

simworld::Course single_slalom_course(double x, TurnDirection dir, int k) {
    simworld::Course course;
    course.bounds = {-5, 20, -5, 5};
    simworld::GatePose gate;
    gate.x = x;
    gate.y = 0.0;
    gate.facing = 0.0;
    gate.kind = simworld::PatternKind::SlalomMarker;
    gate.turn = dir;
    gate.k = k;
    gate.board_side = 0.48;
    course.gates.push_back(gate);
    return course;
}

// camera at `dist` in front of the board, looking at it head-on
simworld::VehicleState head_on_pose(const simworld::Course& course, double dist) {
    simworld::VehicleState pose;
    pose.x = course.gates[0].x - dist - course.camera.mount_forward;
    pose.y = course.gates[0].y;
    pose.heading = 0.0;
    return pose;
}

int distance2(PixelCoord a, PixelCoord b) {
    return (a.row - b.row) * (a.row - b.row) + (a.col - b.col) * (a.col - b.col);
}

// match each detected point to the nearest truth point; returns the
// largest matched pixel distance
double match_error_px(const std::array<PixelCoord, 4>& got,
                      const std::array<simworld::ImagePoint, 4>& truth) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        double best = 1e9;
        for (int j = 0; j < 4; ++j) {
            double dr = got[i].row + 0.5 - truth[j].row;
            double dc = got[i].col + 0.5 - truth[j].col;
            best = std::min(best, std::hypot(dr, dc));
        }
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

TEST_CASE("eliminate_background consumes an all-white frame") {
    GreyImage bright(255);
    for (int steps : {1, 2, 3, 4, 5}) {
        BitImage out = eliminate_background(ppa::threshold(bright, 128), steps);
        CHECK(out == BitImage{});
    }
}

TEST_CASE("eliminate_background reduces the ideal pattern to the disk supports") {
    auto pat = synthetic::stamp_gate_pattern(128, 128, 60);
    BitImage out = eliminate_background(ppa::threshold(pat.frame, 128), 4);
    CHECK(ppa::count_components(out) == 4);
    CHECK(out == pat.disk_support);
}

TEST_CASE("eliminate_background rounds keep B disjoint from the flood fill") {
    // replicate the rounds with public array ops and check B AND F = 0
    // after each removal, plus agreement with the module implementation
    auto pat = synthetic::stamp_gate_pattern(120, 140, 52);
    BitImage b = ppa::threshold(pat.frame, 128);
    BitImage replica = b;
    const int steps = 4;
    for (int k = 1; k <= steps; ++k) {
        BitImage f = ppa::flood(replica, ppa::SeedSpec::border());
        replica = ppa::bit_and(replica, ppa::bit_not(f));
        CHECK(ppa::bit_and(replica, f) == BitImage{});
        if (k < steps) replica = ppa::bit_not(replica);
    }
    CHECK(replica == eliminate_background(std::move(b), steps));
}

TEST_CASE("broken outlines leave nothing after elimination") {
    auto pat = synthetic::stamp_gate_pattern(128, 128, 60);
    GreyImage broken = pat.frame;
    synthetic::break_outlines(pat, broken, 0);
    BitImage out = eliminate_background(ppa::threshold(broken, 128), 4);
    CHECK(ppa::count_components(out) == 0);
}

TEST_CASE("denoise removes an isolated pixel and keeps the interior of a full plane") {
    BitImage lone = ppa::load_point({100, 100});
    CHECK(denoise(lone, 2) == BitImage{});

    BitImage full = BitImage::filled(true);
    BitImage out = denoise(full, 2);
    for (int r = 0; r < ppa::kSize; ++r) {
        for (int c = 0; c < ppa::kSize; ++c) {
            bool border = r < 2 || r >= ppa::kSize - 2 || c < 2 || c >= ppa::kSize - 2;
            if (out.get(r, c) != !border) FAIL("mismatch at ", r, ",", c);
        }
    }
}

TEST_CASE("denoise keeps a survivor inside a solid disk") {
    BitImage disk;
    for (int r = 0; r < ppa::kSize; ++r) {
        for (int c = 0; c < ppa::kSize; ++c) {
            if ((r - 60) * (r - 60) + (c - 90) * (c - 90) <= 64) disk.set(r, c);
        }
    }
    BitImage out = denoise(disk, 2);
    CHECK(ppa::global_or(out));
    CHECK(ppa::bit_and(out, ppa::bit_not(disk)) == BitImage{});
    CHECK(out == oracles::denoise_loop(disk, 2));
}

TEST_CASE("denoise equals the pixel-loop reference and stays inside every shift") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        BitImage img;
        for (int k = 0; k < 4000; ++k) {
            img.set(static_cast<int>(rng() % ppa::kSize),
                    static_cast<int>(rng() % ppa::kSize));
        }
        int p = 1 + static_cast<int>(rng() % 3);
        BitImage out = denoise(img, p);
        CHECK(out == oracles::denoise_loop(img, p));
        for (ppa::Dir d : {ppa::Dir::North, ppa::Dir::South, ppa::Dir::East, ppa::Dir::West}) {
            CHECK(ppa::bit_and(out, ppa::bit_not(ppa::shift(img, d, p))) == BitImage{});
        }
    }
}

TEST_CASE("denoise erases every isolated component smaller than the shrink window") {
    std::mt19937_64 rng(7);
    const int p = 2;
    for (int trial = 0; trial < 20; ++trial) {
        BitImage img;
        // sprinkle well-separated specks with bbox < (2p+1) x (2p+1)
        std::vector<PixelCoord> anchors;
        while (anchors.size() < 30) {
            PixelCoord a{static_cast<int>(8 + rng() % 240), static_cast<int>(8 + rng() % 240)};
            bool ok = true;
            for (const auto& b : anchors) {
                if (std::abs(a.row - b.row) < 12 && std::abs(a.col - b.col) < 12) ok = false;
            }
            if (!ok) continue;
            anchors.push_back(a);
            int h = 1 + static_cast<int>(rng() % 4);  // bbox up to 4x4
            int w = 1 + static_cast<int>(rng() % 4);
            for (int dr = 0; dr < h; ++dr) {
                for (int dc = 0; dc < w; ++dc) {
                    if (rng() % 3) img.set(a.row + dr, a.col + dc);
                }
            }
            img.set(a.row, a.col);
        }
        CHECK(denoise(img, p) == BitImage{});
    }
}

TEST_CASE("extract_centroids on separated blobs") {
    BitImage img;
    // four 3x3 squares: centre is the middle cell
    const std::array<PixelCoord, 4> corners = {{{20, 20}, {20, 200}, {200, 20}, {200, 200}}};
    for (const auto& p : corners) {
        for (int dr = -1; dr <= 1; ++dr)
            for (int dc = -1; dc <= 1; ++dc) img.set(p.row + dr, p.col + dc);
    }
    auto centres = extract_centroids(img, 4);
    REQUIRE(centres.has_value());
    REQUIRE(centres->size() == 4);
    for (const auto& p : corners) {
        CHECK(std::count(centres->begin(), centres->end(), p) == 1);
    }
}

TEST_CASE("extract_centroids single blob and underflow") {
    BitImage one;
    for (int r = 40; r < 47; ++r)
        for (int c = 90; c < 98; ++c) one.set(r, c);
    auto single = extract_centroids(one, 1);
    REQUIRE(single.has_value());
    CHECK((*single)[0] == PixelCoord{43, 93});  // bbox centre, floored

    CHECK_FALSE(extract_centroids(one, 2).has_value());
    CHECK_FALSE(extract_centroids(BitImage{}, 1).has_value());
}

TEST_CASE("extract_centroids matches the labeling oracle on random blob fields") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        BitImage img;
        int blobs = 3 + static_cast<int>(rng() % 5);
        for (int b = 0; b < blobs; ++b) {
            int r0 = 10 + static_cast<int>(rng() % 200);
            int c0 = 10 + static_cast<int>(rng() % 200);
            int h = 3 + static_cast<int>(rng() % 8), w = 3 + static_cast<int>(rng() % 8);
            for (int r = r0; r < r0 + h; ++r)
                for (int c = c0; c < c0 + w; ++c) img.set(r, c);
        }
        auto comps = oracles::label_components(img);
        auto centres = extract_centroids(img, static_cast<int>(comps.size()));
        REQUIRE(centres.has_value());
        std::vector<PixelCoord> expected;
        for (const auto& c : comps) {
            expected.push_back({(c.min_row + c.max_row) / 2, (c.min_col + c.max_col) / 2});
        }
        auto key = [](PixelCoord p) { return p.row * 1000 + p.col; };
        std::sort(centres->begin(), centres->end(),
                  [&](PixelCoord a, PixelCoord b) { return key(a) < key(b); });
        std::sort(expected.begin(), expected.end(),
                  [&](PixelCoord a, PixelCoord b) { return key(a) < key(b); });
        CHECK(*centres == expected);
    }
}

TEST_CASE("detect_disks direct mode on a rendered gate") {
    simworld::Course course = single_gate_course(5.0);
    simworld::Rng rng(1);
    for (double dist : {0.5, 1.0, 1.6, 2.2}) {
        auto res = simworld::render(course, head_on_pose(course, dist), course.camera,
                                    course.render, rng);
        PipelineConfig cfg;
        TrackerState tracker;
        DetectResult det = detect_disks(res.frame, cfg, tracker, 1);
        REQUIRE(det.status == DetectStatus::Direct);
        CHECK(match_error_px(det.observation->quad.points, res.truth[0].disks) <= 2.0);
        REQUIRE(tracker.previous_points.has_value());
        CHECK(tracker.previous_points->size() == 4);
    }
}

TEST_CASE("detect_disks falls back on broken outlines and stays accurate") {
    auto pat = synthetic::stamp_gate_pattern(128, 128, 55);
    PipelineConfig cfg;

    TrackerState tracker;
    DetectResult direct = detect_disks(pat.frame, cfg, tracker, 0);
    REQUIRE(direct.status == DetectStatus::Direct);

    GreyImage broken = pat.frame;
    synthetic::break_outlines(pat, broken, 1);
    DetectResult fb = detect_disks(broken, cfg, tracker, 1);
    REQUIRE(fb.status == DetectStatus::Fallback);
    for (int i = 0; i < 4; ++i) {
        CHECK(distance2(fb.observation->quad.points[i], pat.disk_centres[i]) <= 4);
    }
}

TEST_CASE("direct and fallback centres agree when both succeed") {
    auto pat = synthetic::stamp_gate_pattern(130, 126, 48);
    PipelineConfig cfg;
    TrackerState tracker;
    DetectResult direct = detect_disks(pat.frame, cfg, tracker, 0);
    REQUIRE(direct.status == DetectStatus::Direct);

    // fallback algebra on the same frame, seeded from the true centres
    BitImage mask = denoise(ppa::threshold(pat.frame, cfg.threshold_level), cfg.p_step);
    mask.invert();
    for (int i = 0; i < 4; ++i) {
        BitImage blob = ppa::flood(mask, ppa::SeedSpec::at(pat.disk_centres[i]));
        REQUIRE(ppa::global_or(blob));
        PixelCoord centre = ppa::scan_boundingbox(blob)->centre();
        CHECK(distance2(centre, direct.observation->quad.points[i]) <= 2);
        mask ^= blob;
    }
}

TEST_CASE("detect_disks NoTarget on a blank frame and tracker aging") {
    GreyImage blank(200);
    PipelineConfig cfg;
    cfg.loss_patience = 3;
    TrackerState tracker;
    DetectResult det = detect_disks(blank, cfg, tracker, 0);
    CHECK(det.status == DetectStatus::NoTarget);
    CHECK_FALSE(det.found());

    // prime the tracker, then age it out
    auto pat = synthetic::stamp_gate_pattern(128, 128, 55);
    REQUIRE(detect_disks(pat.frame, cfg, tracker, 1).status == DetectStatus::Direct);
    for (int i = 0; i < 3; ++i) {
        // a frame whose disks are gone and whose previous points land on
        // black: fallback rejected, tracker retained until patience runs out
        detect_disks(blank, cfg, tracker, 2 + i);
    }
    CHECK(tracker.previous_points.has_value());
    detect_disks(blank, cfg, tracker, 9);
    CHECK_FALSE(tracker.previous_points.has_value());
}

TEST_CASE("detect_disks is deterministic") {
    auto pat = synthetic::stamp_gate_pattern(128, 128, 55);
    PipelineConfig cfg;
    TrackerState t1, t2;
    DetectResult a = detect_disks(pat.frame, cfg, t1, 7);
    DetectResult b = detect_disks(pat.frame, cfg, t2, 7);
    REQUIRE(a.status == b.status);
    CHECK(a.observation->quad.points == b.observation->quad.points);
    CHECK(a.observation->quad.centroid == b.observation->quad.centroid);
}

TEST_CASE("detect_disks register budget stays within the hardware counts") {
    auto pat = synthetic::stamp_gate_pattern(128, 128, 55);
    PipelineConfig cfg;
    TrackerState tracker;

    int bits_before = ppa::instrument::bit_images().live.load();
    int greys_before = ppa::instrument::grey_images().live.load();
    ppa::instrument::bit_images().reset_peak();
    ppa::instrument::grey_images().reset_peak();
    DetectResult direct = detect_disks(pat.frame, cfg, tracker, 0);
    REQUIRE(direct.status == DetectStatus::Direct);
    CHECK(ppa::instrument::bit_images().peak.load() - bits_before <= 13);
    CHECK(ppa::instrument::grey_images().peak.load() - greys_before <= 7);

    // fallback route too
    GreyImage broken = pat.frame;
    synthetic::break_outlines(pat, broken, 2);
    ppa::instrument::bit_images().reset_peak();
    ppa::instrument::grey_images().reset_peak();
    DetectResult fb = detect_disks(broken, cfg, tracker, 1);
    REQUIRE(fb.status == DetectStatus::Fallback);
    CHECK(ppa::instrument::bit_images().peak.load() - bits_before <= 13);
    CHECK(ppa::instrument::grey_images().peak.load() - greys_before <= 7);
}

TEST_CASE("decode_slalom reads direction, angle and range") {
    simworld::Rng rng(5);
    PipelineConfig cfg;
    cfg.p_step = 1;  // slalom configs run the lighter filter
    cfg.slalom.f_px = 260.0;
    cfg.slalom.anchor_diameter_m = 2.0 * simworld::layout::kAnchorRadius * 0.24;

    simworld::Course left = single_slalom_course(5.0, TurnDirection::Left, 2);
    left.camera.f_px = 260.0;
    auto res = simworld::render(left, head_on_pose(left, 3.0), left.camera, left.render, rng);
    TrackerState tracker;
    auto cmd = decode_slalom(res.frame, cfg, tracker);
    REQUIRE(cmd.has_value());
    CHECK(cmd->direction == TurnDirection::Left);
    CHECK(cmd->angle_deg == 30.0);
    CHECK(cmd->range_m == doctest::Approx(3.0).epsilon(0.10));

    simworld::Course right = single_slalom_course(5.0, TurnDirection::Right, 2);
    right.camera.f_px = 260.0;
    auto res2 =
        simworld::render(right, head_on_pose(right, 3.0), right.camera, right.render, rng);
    auto cmd2 = decode_slalom(res2.frame, cfg, tracker);
    REQUIRE(cmd2.has_value());
    CHECK(cmd2->direction == TurnDirection::Right);
    CHECK(cmd2->angle_deg == 30.0);
}

TEST_CASE("decode_slalom rejects the four-disk gate pattern") {
    simworld::Course course = single_gate_course(5.0);
    simworld::Rng rng(9);
    auto res =
        simworld::render(course, head_on_pose(course, 1.0), course.camera, course.render, rng);
    PipelineConfig cfg;
    TrackerState tracker;
    CHECK_FALSE(decode_slalom(res.frame, cfg, tracker).has_value());
    CHECK_FALSE(decode_slalom(GreyImage(200), cfg, tracker).has_value());
}

TEST_CASE("decode_slalom covers every angle step") {
    simworld::Rng rng(13);
    PipelineConfig cfg;
    cfg.p_step = 1;
    cfg.slalom.f_px = 260.0;
    cfg.slalom.anchor_diameter_m = 2.0 * simworld::layout::kAnchorRadius * 0.24;
    for (int k = 1; k <= 5; ++k) {
        simworld::Course course = single_slalom_course(5.0, TurnDirection::Right, k);
        course.camera.f_px = 260.0;
        auto res = simworld::render(course, head_on_pose(course, 1.2), course.camera,
                                    course.render, rng);
        TrackerState tracker;
        auto cmd = decode_slalom(res.frame, cfg, tracker);
        REQUIRE(cmd.has_value());
        CHECK(cmd->angle_deg == k * 15.0);
        CHECK(cmd->direction == TurnDirection::Right);
    }
}
