#include <doctest.h>

#include "gfkpp/pdesim.hpp"
#include "support.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace gfkpp;
using gfkpp::test::error_code;

namespace {

GfkppModel quadratic(double m2 = 0.0) { return make_model(1.0, 1.0, 0.0, m2, ReactionFn::quadratic(1.0)); }

std::vector<double> complement(const std::vector<double>& p) {
    std::vector<double> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = 1.0 - p[i];
    return q;
}

}  // namespace

TEST_CASE("uniform logistic growth") {
    const Grid1D g{0.0, 1.0, 64};
    const std::vector<double> ic(64, 0.5);
    const auto frames = simulate_gfkpp(quadratic(), g, ic, 4.0, 1.0);
    REQUIRE(frames.size() == 5);
    for (const auto& f : frames) {
        const double exact = 1.0 / (1.0 + std::exp(-f.t));
        for (double v : f.p) CHECK(std::abs(v - exact) < 1e-4);
    }
    CHECK(frames.back().t == 4.0);
}

TEST_CASE("solutions stay in the unit box") {
    const Grid1D g{-10.0, 30.0, 256};
    const auto frames = simulate_gfkpp(make_model(1.0, 0.3, -1.0, 2.0, ReactionFn::cubic(1.0, 0.3)), g,
                                       smoothed_step(g, 0.0), 5.0, 0.5);
    for (const auto& f : frames)
        for (double v : f.p) {
            CHECK(v >= -kBoxTolerance);
            CHECK(v <= 1.0 + kBoxTolerance);
        }
}

TEST_CASE("two-species kinetics") {
    const Grid1D g{-5.0, 5.0, 64};
    const std::vector<double> ones(64, 1.0);
    const auto steady = simulate_two_species({1.0, 0.5, 0.0}, {2.0, -0.5, 0.0}, g, ones, ones, 2.0, 0.5);
    for (const auto& f : steady)
        for (std::size_t i = 0; i < f.n1.size(); ++i) {
            CHECK(f.n1[i] == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(f.n2[i] == doctest::Approx(1.0).epsilon(1e-12));
        }

    const auto growth = simulate_two_species({1.0, 0.0, 0.7}, {1.0, 0.0, -0.3}, g, ones, ones, 2.0, 1.0);
    for (const auto& f : growth) {
        CHECK(f.n1[10] == doctest::Approx(std::exp(0.7 * f.t)).epsilon(1e-5));
        CHECK(f.n2[10] == doctest::Approx(std::exp(-0.3 * f.t)).epsilon(1e-5));
    }
}

TEST_CASE("zero-flux ends conserve mass") {
    const Grid1D g{-10.0, 10.0, 128};
    const auto n1 = smoothed_step(g, -2.0, 1.0);
    const auto n2 = complement(n1);
    const auto frames = simulate_two_species({1.0, 0.0, 0.0}, {0.3, 0.0, 0.0}, g, n1, n2, 20.0, 5.0);
    const double m1 = std::accumulate(n1.begin(), n1.end(), 0.0);
    const double m2 = std::accumulate(n2.begin(), n2.end(), 0.0);
    for (const auto& f : frames) {
        CHECK(std::accumulate(f.n1.begin(), f.n1.end(), 0.0) == doctest::Approx(m1).epsilon(1e-10));
        CHECK(std::accumulate(f.n2.begin(), f.n2.end(), 0.0) == doctest::Approx(m2).epsilon(1e-10));
    }
}

TEST_CASE("advection moves a bump at speed M") {
    const Grid1D g{-10.0, 30.0, 1024};
    std::vector<double> bump(1024);
    for (int i = 0; i < g.n_cells; ++i) bump[i] = std::exp(-g.x(i) * g.x(i));
    const std::vector<double> zeros(1024, 0.0);
    const auto frames = simulate_two_species({1e-3, 1.0, 0.0}, {1.0, 0.0, 0.0}, g, bump, zeros, 10.0, 10.0);
    const auto& last = frames.back().n1;
    double mass = 0.0;
    double moment = 0.0;
    for (int i = 0; i < g.n_cells; ++i) {
        mass += last[i];
        moment += last[i] * g.x(i);
    }
    CHECK(moment / mass == doctest::Approx(10.0).epsilon(1e-3));
}

TEST_CASE("front speeds") {
    // Synthetic front moving at 2.
    const Grid1D g{0.0, 100.0, 400};
    std::vector<FieldFrame> frames;
    for (int k = 0; k <= 20; ++k) frames.push_back({0.5 * k, smoothed_step(g, 10.0 + k, 1.0)});
    const auto trace = measure_front_speed(frames, g);
    CHECK(trace.speed == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(trace.residual < 1e-6);
    CHECK(trace.points.size() == frames.size());

    const Grid1D h{-30.0, 30.0, 512};
    const auto standing = simulate_gfkpp(make_model(1.0, 1.0, 0.0, 0.0, ReactionFn::cubic(1.0, 0.5)), h,
                                         smoothed_step(h, 0.0), 20.0, 0.5);
    CHECK(std::abs(measure_front_speed(standing, h).speed) <= 0.02);

    // Closed-form bistable speed sqrt(1/2) (1/2 - p0).
    const auto moving = simulate_gfkpp(make_model(1.0, 1.0, 0.0, 0.0, ReactionFn::cubic(1.0, 0.25)), h,
                                       smoothed_step(h, -10.0), 20.0, 0.5);
    CHECK(measure_front_speed(moving, h).speed == doctest::Approx(std::sqrt(0.5) * 0.5).epsilon(0.01));
}

TEST_CASE("front measurement errors") {
    const Grid1D g{0.0, 10.0, 64};
    std::vector<FieldFrame> frames;
    for (int k = 0; k < 12; ++k) frames.push_back({double(k), std::vector<double>(64, 0.2)});
    CHECK(error_code([&] { measure_front_speed(frames, g); }) == ErrorCode::non_front);
    CHECK(error_code([&] { measure_front_speed(frames, g, 0.5, 0.0); }) == ErrorCode::invalid_argument);
}

TEST_CASE("reduced model consistency") {
    const Grid1D g{-20.0, 20.0, 256};
    const std::vector<double> uniform(256, 0.3);
    const auto full = simulate_two_species({1.0, 0.5, 1.0}, {1.0, 0.5, 0.0}, g, uniform, complement(uniform), 5.0, 0.5);
    const auto reduced = simulate_gfkpp(make_model(1.0, 1.0, 0.5, 0.5, ReactionFn::quadratic(1.0)), g, uniform, 5.0, 0.5);
    CHECK(consistency_deviation(full, reduced) <= 1e-6);

    // Regression baseline: unequal diffusivities break the reduction.
    const auto step = smoothed_step(g, 0.0);
    const auto full_d = simulate_two_species({1.0, 0.0, 1.0}, {1.1, 0.0, 0.0}, g, step, complement(step), 5.0, 0.5);
    const auto reduced_d = simulate_gfkpp(make_model(1.0, 1.1, 0.0, 0.0, ReactionFn::quadratic(1.0)), g, step, 5.0, 0.5);
    CHECK(consistency_deviation(full_d, reduced_d) == doctest::Approx(0.331545).epsilon(1e-5));

    const auto shorter = simulate_gfkpp(make_model(1.0, 1.0, 0.5, 0.5, ReactionFn::quadratic(1.0)), g, uniform, 4.0, 0.5);
    CHECK(error_code([&] { consistency_deviation(full, shorter); }) == ErrorCode::alignment);
}

TEST_CASE("input validation") {
    const Grid1D small{0.0, 1.0, 10};
    CHECK(error_code([&] { small.validate(); }) == ErrorCode::invalid_argument);
    const Grid1D g{0.0, 1.0, 64};
    const std::vector<double> bad(64, 1.5);
    CHECK(error_code([&] { simulate_gfkpp(quadratic(), g, bad, 1.0, 0.5); }) == ErrorCode::invalid_argument);
    const std::vector<double> ok(64, 0.5);
    CHECK(error_code([&] { simulate_gfkpp(quadratic(), g, ok, 0.0, 0.5); }) == ErrorCode::invalid_argument);
}

TEST_CASE("csv writers") {
    const Grid1D g{0.0, 64.0, 64};
    const auto frames = simulate_gfkpp(quadratic(), g, std::vector<double>(64, 0.5), 1.0, 0.5);
    std::ostringstream os;
    write_frames_csv(os, g, frames, "run A\nline two");
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "# run A");
    std::getline(in, line);
    CHECK(line == "# line two");
    std::getline(in, line);
    CHECK(line == "t,x,p");
    std::getline(in, line);
    CHECK(line == "0.0,0.5,0.5");
    std::size_t rows = 1;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 3 * 64);

    FrontTrace trace;
    trace.points = {{0.0, 1.0}, {1.0, 3.0}};
    std::ostringstream fs;
    write_front_csv(fs, trace, "");
    CHECK(fs.str().rfind("t,x_front\n0.0,1.0\n", 0) == 0);
}
