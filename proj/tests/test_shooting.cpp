#include <doctest.h>

#include "gfkpp/model.hpp"
#include "gfkpp/shooting.hpp"
#include "gfkpp/speed.hpp"
#include "support.hpp"

#include <cmath>
#include <sstream>
#include <string>

using namespace gfkpp;
using gfkpp::test::error_code;

namespace {

GfkppModel quadratic(double m2, double d2 = 1.0) { return make_model(1.0, d2, 0.0, m2, ReactionFn::quadratic(1.0)); }

GfkppModel cubic(double p0, double m2 = 0.0) { return make_model(1.0, 1.0, 0.0, m2, ReactionFn::cubic(1.0, p0)); }

ShootResult shoot_down(const GfkppModel& m, double c, std::optional<double> section = std::nullopt) {
    return shoot(m, c, make_manifold(m, c, 1.0, ManifoldBranch::unstable_wu), 0.0, section);
}

}  // namespace

TEST_CASE("shoot outcomes for the unit quadratic") {
    const auto m = quadratic(0.0);
    CHECK(shoot_down(m, 3.0).outcome == Outcome::connect);
    CHECK(shoot_down(m, 2.0).outcome == Outcome::connect);
    // f > 0 on (0, 1) keeps W^u below Q = 0, so a subcritical speed overshoots P = 0.
    const auto slow = shoot_down(m, 1.0);
    CHECK(slow.outcome == Outcome::overshoot);
    CHECK(slow.trajectory.back().q == doctest::Approx(-0.105).epsilon(0.02));
}

TEST_CASE("symmetric cubic standing wave connects") {
    const auto r = shoot_down(cubic(0.5), 0.0);
    CHECK(r.outcome == Outcome::connect);
    const auto end = r.trajectory.back();
    CHECK(std::abs(end.p) <= kTargetWindow + 1e-12);
    CHECK(std::abs(end.q) <= 1e-4);
}

TEST_CASE("trajectories are graphs with decreasing p") {
    for (double c : {1.0, 2.0, 3.0}) {
        const auto r = shoot_down(quadratic(4.0, 2.0), c + 2.0);
        REQUIRE(r.trajectory.size() > 2);
        for (std::size_t i = 1; i < r.trajectory.size(); ++i) {
            CHECK(r.trajectory[i].p < r.trajectory[i - 1].p);
            CHECK(r.trajectory[i].q <= kTurnTol);
        }
    }
}

TEST_CASE("connection persists above the first connecting speed") {
    const auto m = make_model(1.0, 0.5, 0.0, 1.0, ReactionFn::quadratic(1.0));
    bool connected = false;
    for (double c = 0.0; c <= 4.0 + 1e-12; c += 0.1) {
        const bool now = shoot_down(m, c).outcome == Outcome::connect;
        if (connected) CHECK(now);
        connected = connected || now;
    }
    CHECK(connected);
}

TEST_CASE("manifold offset convergence") {
    const auto m = quadratic(4.0, 2.0);
    const double c = 2.7;
    const auto spec = make_manifold(m, c, 1.0, ManifoldBranch::unstable_wu);
    const auto half = make_manifold(m, c, 1.0, ManifoldBranch::unstable_wu, 0.5 * kStartOffsetScale);
    for (double s : {0.2, 0.5, 0.8}) {
        const auto a = shoot(m, c, spec, 0.0, s).q_at_section;
        const auto b = shoot(m, c, half, 0.0, s).q_at_section;
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        CHECK(std::abs(*a - *b) < 10.0 * kConnectTol);
    }
}

TEST_CASE("manifold preconditions") {
    const auto m = quadratic(0.0);
    // 0 is a node, not a saddle.
    CHECK(error_code([&] { make_manifold(m, 3.0, 0.0, ManifoldBranch::unstable_wu); }) ==
          ErrorCode::invalid_manifold);
    // Spiral at 0 for c < 2 has no fast direction.
    CHECK(error_code([&] { make_manifold(m, 1.0, 0.0, ManifoldBranch::fast_stable_wss); }) ==
          ErrorCode::invalid_manifold);
    CHECK(error_code([&] { make_manifold(m, 1.0, 0.5, ManifoldBranch::unstable_wu); }) ==
          ErrorCode::not_equilibrium);
}

TEST_CASE("mirror trajectory under sym2 after sym1") {
    // p(xi) -> 1 - p(-xi) maps W^u of the saddle 1 at speed c onto W^s of the
    // saddle 0 of the transformed model at speed -c, with (P, Q) -> (1 - P, Q).
    const auto m = make_model(1.0, 2.0, 0.5, 1.0, ReactionFn::cubic(1.0, 0.3));
    const auto mirror = apply_sym2(apply_sym1(m));
    const double c = unique_speed_bistable(m, 1.0, 0.3, 0.0).c_star + 0.05;
    int compared = 0;
    for (double s : {0.1, 0.2, 0.4, 0.6, 0.8, 0.9}) {
        const auto a = shoot(m, c, make_manifold(m, c, 1.0, ManifoldBranch::unstable_wu), 0.0, s).q_at_section;
        const auto b = shoot(mirror, -c, make_manifold(mirror, -c, 0.0, ManifoldBranch::stable_ws), 1.0, 1.0 - s)
                           .q_at_section;
        if (!a || !b) continue;
        ++compared;
        CHECK(*a == doctest::Approx(*b).epsilon(1e-6));
    }
    CHECK(compared >= 4);
}

TEST_CASE("section gap for the symmetric cubic") {
    const auto m = cubic(0.5);
    CHECK(std::abs(section_gap(m, 0.0, 1.0, 0.5, 0.0)) < 1e-9);
    const double up = section_gap(m, 0.2, 1.0, 0.5, 0.0);
    const double down = section_gap(m, -0.2, 1.0, 0.5, 0.0);
    CHECK(up > 0.0);
    CHECK(down < 0.0);
    CHECK(up == doctest::Approx(0.1326).epsilon(1e-3));
    CHECK(down == doctest::Approx(-up).epsilon(1e-8));
}

TEST_CASE("section gap has a single sign change") {
    const auto m = cubic(0.25, 1.0);
    double prev = 0.0;
    bool have_prev = false;
    int sign_changes = 0;
    int samples = 0;
    for (double c = -1.0; c <= 2.5 + 1e-12; c += 0.05) {
        double w = 0.0;
        try {
            w = section_gap(m, c, 1.0, 0.25, 0.0);
        } catch (const Error& e) {
            REQUIRE(e.code() == ErrorCode::window_violation);
            continue;
        }
        ++samples;
        if (have_prev) {
            CHECK(w > prev);
            if ((w > 0.0) != (prev > 0.0)) ++sign_changes;
        }
        prev = w;
        have_prev = true;
    }
    CHECK(samples >= 10);
    CHECK(sign_changes == 1);
}

TEST_CASE("separatrix comparison") {
    const auto pushed = quadratic(4.0);
    CHECK(separatrix_compare(pushed, 2.6).admissible);
    CHECK_FALSE(separatrix_compare(pushed, 2.3).admissible);
    CHECK(separatrix_compare(quadratic(0.0), 2.0).admissible);
    CHECK(error_code([&] { separatrix_compare(pushed, 1.9); }) == ErrorCode::precondition);
}

TEST_CASE("trajectory csv") {
    const auto r = shoot_down(quadratic(0.0), 3.0);
    std::ostringstream os;
    write_trajectory_csv(os, r.trajectory);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "p,q");
    std::size_t rows = 0;
    std::string last;
    while (std::getline(in, line)) {
        ++rows;
        last = line;
    }
    CHECK(rows == r.trajectory.size());
    const auto comma = last.find(',');
    REQUIRE(comma != std::string::npos);
    CHECK(std::stod(last.substr(0, comma)) == r.trajectory.back().p);
    CHECK(std::stod(last.substr(comma + 1)) == r.trajectory.back().q);
}
