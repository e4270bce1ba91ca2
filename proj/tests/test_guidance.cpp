#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "guidance/controller.hpp"
#include "guidance/pid.hpp"
#include "guidance/quadrant.hpp"
#include "guidance/slalom_planner.hpp"
#include "simworld/vehicle.hpp"

using namespace guidance;
using ppa::PixelCoord;

namespace {

std::array<PixelCoord, 4> square_corners() {
    return {{{10, 10}, {10, 30}, {30, 10}, {30, 30}}};
}

Quadrangle quad_of(const std::array<PixelCoord, 4>& pts) {
    auto q = order_by_quadrant(pts);
    REQUIRE(q.has_value());
    return *q;
}

}  // namespace

TEST_CASE("order_by_quadrant canonicalizes a shuffled square") {
    std::array<PixelCoord, 4> shuffled = {{{30, 30}, {10, 10}, {30, 10}, {10, 30}}};
    auto q = order_by_quadrant(shuffled);
    REQUIRE(q.has_value());
    CHECK(q->points[0] == PixelCoord{10, 10});
    CHECK(q->points[1] == PixelCoord{10, 30});
    CHECK(q->points[2] == PixelCoord{30, 10});
    CHECK(q->points[3] == PixelCoord{30, 30});
    CHECK(q->centroid == PixelCoord{20, 20});

    auto again = order_by_quadrant(q->points);
    REQUIRE(again.has_value());
    CHECK(again->points == q->points);
}

TEST_CASE("order_by_quadrant rejects degenerate layouts") {
    // point on a centroid axis
    CHECK_FALSE(order_by_quadrant({{{10, 20}, {10, 10}, {30, 10}, {30, 40}}}).has_value());
    // two points in the same quadrant
    CHECK_FALSE(order_by_quadrant({{{10, 10}, {12, 12}, {40, 38}, {38, 41}}}).has_value());
}

TEST_CASE("order_by_quadrant is invariant under all input permutations") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> spread(5, 60);
    int tested = 0;
    while (tested < 1000) {
        PixelCoord centre{static_cast<int>(80 + rng() % 90),
                          static_cast<int>(80 + rng() % 90)};
        std::array<PixelCoord, 4> pts = {{
            {centre.row - spread(rng), centre.col - spread(rng)},
            {centre.row - spread(rng), centre.col + spread(rng)},
            {centre.row + spread(rng), centre.col - spread(rng)},
            {centre.row + spread(rng), centre.col + spread(rng)},
        }};
        auto ref = order_by_quadrant(pts);
        if (!ref) continue;  // landed on an axis of its own centroid
        ++tested;
        std::array<int, 4> idx = {0, 1, 2, 3};
        std::sort(idx.begin(), idx.end());
        do {
            std::array<PixelCoord, 4> perm;
            for (int i = 0; i < 4; ++i) perm[i] = pts[idx[i]];
            auto got = order_by_quadrant(perm);
            REQUIRE(got.has_value());
            CHECK(got->points == ref->points);
            CHECK(got->centroid == ref->centroid);
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
}

TEST_CASE("compute_errors fixed point and translation") {
    Quadrangle obs = quad_of(square_corners());
    ReferenceMarker ref{obs};
    ControlError e0 = compute_errors(obs, ref);
    CHECK(e0.d == 0.0);
    CHECK(e0.delta == 0.0);

    // any valid quadrangle is its own fixed point
    Quadrangle skewed = quad_of({{{12, 14}, {9, 33}, {31, 8}, {28, 36}}});
    ControlError es = compute_errors(skewed, ReferenceMarker{skewed});
    CHECK(es.d == 0.0);
    CHECK(es.delta == 0.0);

    // translate 10 px right
    std::array<PixelCoord, 4> moved = square_corners();
    for (auto& p : moved) p.col += 10;
    ControlError e1 = compute_errors(quad_of(moved), ref);
    CHECK(e1.d == 10.0);
    CHECK(e1.delta == 0.0);
}

TEST_CASE("compute_errors bottom-pair shift") {
    Quadrangle obs = quad_of(square_corners());
    ReferenceMarker ref{obs};
    std::array<PixelCoord, 4> pts = square_corners();
    pts[2].col += 4;  // bottom-left
    pts[3].col += 4;  // bottom-right
    ControlError e = compute_errors(quad_of(pts), ref);
    CHECK(e.d == 2.0);
    CHECK(e.delta == 8.0);
}

TEST_CASE("translation covariance of the error channels") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        std::array<PixelCoord, 4> pts = {{
            {static_cast<int>(40 + rng() % 30), static_cast<int>(40 + rng() % 30)},
            {static_cast<int>(40 + rng() % 30), static_cast<int>(120 + rng() % 30)},
            {static_cast<int>(120 + rng() % 30), static_cast<int>(40 + rng() % 30)},
            {static_cast<int>(120 + rng() % 30), static_cast<int>(120 + rng() % 30)},
        }};
        auto base = order_by_quadrant(pts);
        if (!base) continue;
        ReferenceMarker ref{*base};
        int dc = static_cast<int>(rng() % 40) - 20;
        std::array<PixelCoord, 4> moved = pts;
        for (auto& p : moved) p.col += dc;
        auto shifted = order_by_quadrant(moved);
        REQUIRE(shifted.has_value());
        ControlError e = compute_errors(*shifted, ref);
        CHECK(e.d == doctest::Approx(dc));
        CHECK(e.delta == doctest::Approx(0.0));
    }
}

TEST_CASE("pid_step basics") {
    PidState s;
    CHECK(pid_step(s, {1.0, 1.0, 1.0}, 0.0) == 0.0);

    PidState s2;
    CHECK(pid_step(s2, {2.0, 0.0, 0.0}, 3.0) == 6.0);
}

TEST_CASE("pid_step recurrence") {
    PidState s;
    PidGains g{1.0, 0.5, 0.1};
    CHECK(pid_step(s, g, 1.0) == doctest::Approx(1.6).epsilon(1e-12));
    CHECK(pid_step(s, g, 1.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(pid_step(s, g, 1.0) == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("pid_step with ki=kd=0 is memoryless") {
    PidState s;
    PidGains g{0.7, 0.0, 0.0};
    double a = pid_step(s, g, 4.0);
    double b = pid_step(s, g, 4.0);
    CHECK(a == b);
    CHECK(pid_step(s, g, -2.0) == doctest::Approx(-1.4));
}

TEST_CASE("pid integral clamp holds") {
    PidState s;
    s.integral_clamp = 10.0;
    PidGains g{0.0, 1.0, 0.0};
    for (int i = 0; i < 100; ++i) pid_step(s, g, 5.0);
    CHECK(s.integral == 10.0);
    for (int i = 0; i < 200; ++i) pid_step(s, g, -5.0);
    CHECK(s.integral == -10.0);
}

TEST_CASE("steering_output zero error and clamping") {
    ControllerConfig cfg;
    PidState s1, s2;
    SteeringCommand zero = steering_output(s1, s2, cfg, {0.0, 0.0});
    CHECK(zero.angle == 0.0);
    CHECK_FALSE(zero.clamped);

    PidState s3, s4;
    SteeringCommand big = steering_output(s3, s4, cfg, {1e6, 0.0});
    CHECK(big.clamped);
    CHECK(std::abs(big.angle) == cfg.max_steer);
}

TEST_CASE("steering_output constant error with P-only gains") {
    ControllerConfig cfg;
    cfg.gains_d = {0.004, 0.0, 0.0};
    cfg.gains_delta = {0.002, 0.0, 0.0};
    PidState s1, s2;
    ControlError err{12.0, -6.0};
    double expected = -(0.004 * 12.0 + 0.002 * -6.0);
    for (int i = 0; i < 5; ++i) {
        SteeringCommand cmd = steering_output(s1, s2, cfg, err);
        CHECK(cmd.angle == doctest::Approx(expected).epsilon(1e-12));
    }
    // positive d (pattern right of reference) steers right: negative angle
    PidState s5, s6;
    CHECK(steering_output(s5, s6, cfg, {10.0, 0.0}).angle < 0.0);
}

TEST_CASE("steering stays clamped over random error storms") {
    ControllerConfig cfg;
    cfg.gains_d = {0.02, 0.005, 0.01};
    cfg.gains_delta = {0.01, 0.002, 0.005};
    PidState s1, s2;
    s1.integral_clamp = cfg.max_steer / (cfg.pixels_to_radians * cfg.gains_d.ki);
    s2.integral_clamp = cfg.max_steer / (cfg.pixels_to_radians * cfg.gains_delta.ki);
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-500.0, 500.0);
    for (int i = 0; i < 1000000; ++i) {
        SteeringCommand cmd = steering_output(s1, s2, cfg, {u(rng), u(rng)});
        if (std::abs(cmd.angle) > cfg.max_steer) {
            FAIL("clamp violated at iteration ", i);
        }
    }
}

TEST_CASE("loss_policy holds then decays") {
    ControllerConfig cfg;
    cfg.hold_frames = 5;
    cfg.decay = 0.5;
    SteeringCommand last{0.4, false};
    CHECK(loss_policy(last, 1, cfg).angle == 0.4);
    CHECK(loss_policy(last, 5, cfg).angle == 0.4);
    CHECK(loss_policy(last, 8, cfg).angle == doctest::Approx(0.05));
    CHECK(loss_policy(last, 200, cfg).angle == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("slalom planner phases") {
    SlalomPlannerConfig cfg;
    SlalomPlanner planner(cfg);
    CHECK(planner.phase() == SlalomPlanner::Phase::Search);

    markers::SlalomCommand far;
    far.direction = markers::TurnDirection::Right;
    far.angle_deg = 30.0;
    far.range_m = 3.0;
    far.centroid = {128, 150};  // marker right of centre
    SteeringCommand cmd = planner.update(far, 0.0);
    CHECK(planner.phase() == SlalomPlanner::Phase::Approach);
    CHECK(cmd.angle < 0.0);  // steer toward it

    markers::SlalomCommand close = far;
    close.range_m = 0.79;
    planner.update(close, 0.0);
    CHECK(planner.phase() == SlalomPlanner::Phase::Turn);
    CHECK(planner.turns_completed() == 1);
}

TEST_CASE("slalom turn reaches the commanded heading change") {
    // idealized decoder: command derived from true geometry
    const double marker_x = 5.0, marker_y = 0.0;
    simworld::VehicleParams params;
    params.v_cmd = 3.88;
    SlalomPlannerConfig cfg;
    cfg.speed = params.v_cmd;
    cfg.wheelbase = params.wheelbase;
    cfg.steer_rate = params.steer_rate;

    for (auto [dir, angle_deg] : std::initializer_list<std::pair<markers::TurnDirection, double>>{
             {markers::TurnDirection::Right, 30.0},
             {markers::TurnDirection::Left, 45.0},
             {markers::TurnDirection::Right, 15.0}}) {
        SlalomPlanner planner(cfg);
        simworld::VehicleState v;
        v.x = 0.0;
        v.y = 0.0;
        const double dt = 1.0 / 200.0;
        double heading_at_turn_start = 0.0;
        bool saw_turn = false;

        for (int step = 0; step < 4000; ++step) {
            double dx = marker_x - v.x, dy = marker_y - v.y;
            double range = std::hypot(dx, dy);
            std::optional<markers::SlalomCommand> decoded;
            double bearing = std::remainder(std::atan2(dy, dx) - v.heading, 2 * M_PI);
            if (range > 0.2 && std::abs(bearing) < 0.5 && dx > 0) {
                markers::SlalomCommand c;
                c.direction = dir;
                c.angle_deg = angle_deg;
                c.range_m = range;
                c.centroid = {128, static_cast<int>(128 - 220.0 * std::tan(bearing))};
                decoded = c;
            }
            bool was_turn = planner.phase() == SlalomPlanner::Phase::Turn;
            SteeringCommand cmd = planner.update(decoded, v.heading);
            if (!was_turn && planner.phase() == SlalomPlanner::Phase::Turn) {
                heading_at_turn_start = v.heading;
                saw_turn = true;
            }
            if (saw_turn && planner.phase() == SlalomPlanner::Phase::Recover) {
                // let the servo swing back with no further commands
                while (std::abs(v.steer) > 1e-3) {
                    v = simworld::step_vehicle(v, {0.0, false}, dt / 5.0, params);
                }
                break;
            }
            for (int s = 0; s < 5; ++s) v = simworld::step_vehicle(v, cmd, dt / 5.0, params);
        }
        REQUIRE(saw_turn);
        double turned = std::abs(std::remainder(v.heading - heading_at_turn_start, 2 * M_PI));
        CHECK(std::abs(turned - angle_deg * M_PI / 180.0) < 5.0 * M_PI / 180.0);
    }
}
