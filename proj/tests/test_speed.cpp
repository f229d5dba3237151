#include <doctest.h>

#include "gfkpp/model.hpp"
#include "gfkpp/speed.hpp"
#include "support.hpp"

#include <cmath>
#include <vector>

using namespace gfkpp;
using gfkpp::test::error_code;

namespace {

GfkppModel quadratic(double k, double d1, double d2, double m1, double m2) {
    return make_model(d1, d2, m1, m2, ReactionFn::quadratic(k));
}

GfkppModel cubic(double p0, double m1 = 0.0, double m2 = 0.0, double d1 = 1.0, double d2 = 1.0) {
    return make_model(d1, d2, m1, m2, ReactionFn::cubic(1.0, p0));
}

// -(P)(P - 0.2)(P - 0.5)(P - 0.8)(P - 1)
ReactionFn quintic_d() { return ReactionFn::polynomial({0.0, -0.08, 0.74, -2.16, 2.5, -1.0}); }
// -(P)(P - 0.25)(P - 0.5)(P - 0.75)(P - 1)
ReactionFn quintic_symmetric() { return ReactionFn::polynomial({0.0, -0.09375, 0.78125, -2.1875, 2.5, -1.0}); }
// P (1 - P)(P - 0.3)(P - 0.7)
ReactionFn quartic_c1() { return ReactionFn::polynomial({0.0, 0.21, -1.21, 2.0, -1.0}); }


}  // namespace

TEST_CASE("existence classification") {
    CHECK(classify_existence(quadratic(1.0, 1.0, 1.0, 0.0, 0.0)) == ExistenceCase::A1);
    CHECK(classify_existence(quadratic(-1.0, 1.0, 1.0, 0.0, 0.0)) == ExistenceCase::A2);
    CHECK(classify_existence(cubic(0.4)) == ExistenceCase::B);
    CHECK(classify_existence(make_model(1.0, 1.0, 0.0, 0.0, quintic_d())) == ExistenceCase::D);
    const auto c1 = make_model(1.0, 1.0, 0.0, 0.0, quartic_c1());
    CHECK(classify_existence(c1) == ExistenceCase::C1);
    CHECK(classify_existence(apply_sym1(c1)) == ExistenceCase::C2);
}

TEST_CASE("closed-form quadratic") {
    const auto a = closed_form_quadratic(quadratic(1.0, 1.0, 1.0, 0.0, 0.0));
    CHECK(a.regime == Regime::half_line_closed_right);
    CHECK(a.c_star == doctest::Approx(2.0));
    CHECK(a.front == FrontKind::pulled);
    CHECK(closed_form_quadratic(quadratic(1.0, 1.0, 1.0, 0.0, 4.0)).c_star == doctest::Approx(2.5));
    CHECK(closed_form_quadratic(quadratic(1.0, 1.0, 1.0, 0.0, 4.0)).front == FrontKind::pushed);
    CHECK(closed_form_quadratic(quadratic(1.0, 1.0, 1.0, 1.0, 1.0)).c_star == doctest::Approx(3.0));
    CHECK(error_code([] { closed_form_quadratic(quadratic(1.0, 1.0, 2.0, 0.0, 0.0)); }) == ErrorCode::wrong_oracle);
    CHECK(error_code([] { closed_form_quadratic(cubic(0.5)); }) == ErrorCode::wrong_oracle);
}

TEST_CASE("closed-form cubic") {
    CHECK(std::abs(closed_form_cubic(cubic(0.5)).speeds.c_star) < 1e-15);
    const auto q = closed_form_cubic(cubic(0.25));
    CHECK(q.speeds.regime == Regime::unique);
    CHECK(q.speeds.c_star == doctest::Approx(std::sqrt(0.5) * 0.5).epsilon(1e-14));
    CHECK(q.zeta == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(closed_form_cubic(cubic(0.5, 0.0, 1.0)).speeds.c_star == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("numeric minimal speed") {
    const auto pushed = minimal_speed_numeric(quadratic(1.0, 1.0, 1.0, 0.0, 3.0));
    CHECK(pushed.c_star == doctest::Approx(1.5 + 2.0 / 3.0).epsilon(1e-5));
    CHECK(pushed.front == FrontKind::pushed);

    const auto pulled = minimal_speed_numeric(quadratic(1.0, 1.0, 1.0, 0.0, 1.0));
    CHECK(pulled.c_star == 2.0);
    CHECK(pulled.front == FrontKind::pulled);

    // Independent xi-parameterized shooting oracle: 2.170389250.
    const auto general = minimal_speed_numeric(quadratic(1.0, 1.0, 2.0, 0.0, 3.0));
    CHECK(general.front == FrontKind::pushed);
    CHECK(general.c_star == doctest::Approx(2.170389250).epsilon(1e-6));

    CHECK(error_code([] { minimal_speed_numeric(cubic(0.3)); }) == ErrorCode::precondition);
}

TEST_CASE("unique bistable speed") {
    CHECK(std::abs(unique_speed_bistable(cubic(0.5), 1.0, 0.5, 0.0).c_star) < 1e-8);
    const auto a = unique_speed_bistable(cubic(0.25), 1.0, 0.25, 0.0);
    CHECK(a.regime == Regime::unique);
    CHECK(std::abs(a.c_star - std::sqrt(0.5) * 0.5) < 1e-5);
    const auto b = unique_speed_bistable(cubic(0.25, 0.0, 2.0), 1.0, 0.25, 0.0);
    CHECK(std::abs(b.c_star - (1.0 + 1.0 / (2.0 + std::sqrt(12.0)))) < 1e-5);
}

TEST_CASE("cascade") {
    const auto bistable = cascade_speeds(cubic(0.5));
    CHECK(bistable.speeds.regime == Regime::unique);
    CHECK(bistable.nodes.size() == 1);
    CHECK(std::abs(bistable.speeds.c_star) < 1e-8);

    const auto c1 = cascade_speeds(make_model(1.0, 1.0, 0.0, 0.0, quartic_c1()));
    CHECK(c1.speeds.regime == Regime::empty);
    REQUIRE(c1.nodes.size() == 3);
    CHECK(c1.nodes[0].c_star_pair == doctest::Approx(-0.0146212).epsilon(1e-4));
    CHECK(c1.nodes[1].c_star_pair == doctest::Approx(std::sqrt(0.21) * 2.0).epsilon(1e-6));
    CHECK_FALSE(c1.nodes[2].exists);

    const auto d = cascade_speeds(make_model(1.0, 1.0, 0.0, 0.0, quintic_symmetric()));
    CHECK(d.speeds.regime == Regime::unique);
    CHECK(std::abs(d.speeds.c_star) < 1e-6);
    for (const auto& node : d.nodes)
        if (!node.chain.empty()) CHECK(node.exists);

    // Upper pair loses ground (net negative integral of f on (0.5, 1)) while the
    // lower pair advances, so the two fronts separate.
    const auto dq = cascade_speeds(make_model(1.0, 1.0, 0.0, 0.0, quintic_d()));
    CHECK(dq.speeds.regime == Regime::empty);
    REQUIRE(dq.nodes.size() >= 2);
    CHECK(dq.nodes[0].c_star_pair < 0.0);
    CHECK(dq.nodes[1].c_star_pair > 0.0);
}

TEST_CASE("cascade pair speeds increase along a chain") {
    const auto r = cascade_speeds(make_model(1.0, 1.0, 0.0, 0.0, quintic_symmetric()));
    for (const auto& node : r.nodes) {
        if (node.chain.empty() || !node.exists) continue;
        std::vector<double> speeds;
        std::size_t top = node.upper;
        for (std::size_t saddle : node.chain) {
            for (const auto& sub : r.nodes)
                if (sub.upper == top && sub.lower == saddle) speeds.push_back(sub.c_star_pair);
            top = saddle;
        }
        for (std::size_t i = 1; i < speeds.size(); ++i) CHECK(speeds[i - 1] < speeds[i]);
    }
}

TEST_CASE("unsupported node-saddle-node layout") {
    // f'(0) > 0 and f'(1) > 0 with one interior saddle.
    const auto m = make_model(1.0, 1.0, 0.0, 0.0, ReactionFn::cubic(-1.0, 0.5));
    CHECK(classify_existence(m) == ExistenceCase::B);
    CHECK(error_code([&] { typea_speed_set(m); }) == ErrorCode::precondition);
}

TEST_CASE("speed sets by case") {
    const auto a2 = typea_speed_set(quadratic(-1.0, 1.0, 1.0, 0.0, 0.0));
    CHECK(a2.regime == Regime::half_line_closed_left);
    CHECK(a2.c_star == doctest::Approx(-2.0));

    const auto tb = type_b_speed_set(quadratic(1.0, 1.0, 1.0, 0.0, 0.0));
    CHECK(tb.regime == Regime::half_line_closed_left);
    CHECK(tb.c_star == doctest::Approx(-2.0));
    CHECK(tb.orbit_type == OrbitType::type_b);

    const auto tc = type_b_speed_set(cubic(0.5));
    CHECK(tc.regime == Regime::unique);
    CHECK(std::abs(tc.c_star) < 1e-8);

    const auto m4 = quadratic(1.0, 1.0, 1.0, 0.0, 4.0);
    CHECK(type_b_speed_set(apply_sym2(m4)).c_star == doctest::Approx(-2.5).epsilon(1e-6));
    CHECK(type_b_speed_set(m4).c_star == doctest::Approx(-2.0));
}

TEST_CASE("speed set negation") {
    SpeedSet s;
    s.regime = Regime::half_open_interval;
    s.c_star = 1.0;
    s.c_secondary = 3.0;
    const auto n = negate(s);
    CHECK(n.regime == Regime::half_open_interval_left);
    CHECK(n.c_star == -3.0);
    CHECK(n.c_secondary == -1.0);
    CHECK(negate(n).regime == s.regime);
    CHECK(negate(n).c_star == s.c_star);
}

TEST_CASE("Galilean shift") {
    const GfkppModel models[] = {quadratic(1.0, 1.0, 2.0, 0.0, 3.0), quadratic(2.0, 0.5, 1.0, 0.3, 0.0),
                                 cubic(0.3, 0.0, 1.0, 1.0, 1.5)};
    for (const auto& m : models) {
        const double base = typea_speed_set(m).c_star;
        for (double shift : {-2.0, 1.0, 5.0}) {
            auto s = m;
            s.m1 += shift;
            s.m2 += shift;
            CHECK(std::abs(typea_speed_set(s).c_star - (base + shift)) <= 1e-6);
        }
    }
}

TEST_CASE("scaling law") {
    for (double s : {0.5, 2.0}) {
        const auto m = quadratic(1.0, 1.0, 2.0, 0.0, 3.0);
        const auto scaled = quadratic(s * s, 1.0, 2.0, 0.0, 3.0 * s);
        CHECK(std::abs(minimal_speed_numeric(scaled).c_star - s * minimal_speed_numeric(m).c_star) <= 1e-6 * s);
        const auto b = cubic(0.3, 0.5, 1.0, 1.0, 2.0);
        auto bs = make_model(1.0, 2.0, 0.5 * s, s, ReactionFn::cubic(s * s, 0.3));
        CHECK(std::abs(typea_speed_set(bs).c_star - s * typea_speed_set(b).c_star) <= 1e-6 * s);
    }
}

TEST_CASE("lower bound") {
    for (double d2 : {0.25, 1.0, 4.0}) {
        for (double m2 : {-3.0, 0.0, 2.0, 6.0}) {
            const auto m = quadratic(1.5, 0.7, d2, 0.4, m2);
            CHECK(minimal_speed_numeric(m).c_star >= linear_spreading_speed(m) - 1e-6);
        }
    }
}

TEST_CASE("TypeA of m mirrors TypeB of sym2(m)") {
    const GfkppModel models[] = {quadratic(1.0, 1.0, 2.0, 0.0, 3.0), quadratic(1.0, 1.0, 1.0, 0.0, 0.0),
                                 cubic(0.25, 0.0, 2.0), cubic(0.6, -1.0, 0.5, 1.0, 3.0),
                                 quadratic(-1.0, 2.0, 1.0, 1.0, -1.0)};
    for (const auto& m : models) {
        const auto a = typea_speed_set(m);
        const auto b = negate(type_b_speed_set(apply_sym2(m)));
        CHECK(a.regime == b.regime);
        CHECK(std::abs(a.c_star - b.c_star) <= 1e-6);
    }
}

TEST_CASE("minimal speed is nondecreasing in M2") {
    for (double d2 : {0.5, 2.0}) {
        double prev = -1e300;
        for (double m2 = 0.0; m2 <= 10.0 + 1e-12; m2 += 0.5) {
            const double c = minimal_speed_numeric(quadratic(1.0, 1.0, d2, 0.0, m2)).c_star;
            CHECK(c >= prev - 1e-6);
            prev = c;
        }
    }
}
