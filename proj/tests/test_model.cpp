#include <doctest.h>

#include "gfkpp/model.hpp"
#include "gfkpp/model_io.hpp"
#include "gfkpp/sweep.hpp"
#include "support.hpp"

#include <cmath>
#include <limits>

using namespace gfkpp;
using gfkpp::test::error_code;

namespace {

GfkppModel unit_quadratic(double m1 = 0.0, double m2 = 0.0) {
    return make_model(1.0, 1.0, m1, m2, ReactionFn::quadratic(1.0));
}

}  // namespace

TEST_CASE("reaction evaluation") {
    const auto q = ReactionFn::quadratic(1.0);
    CHECK(q(0.5) == doctest::Approx(0.25));
    CHECK(q(0.0) == 0.0);
    CHECK(q(1.0) == 0.0);
    CHECK(q.derivative(0.0) == doctest::Approx(1.0));
    CHECK(q.derivative(1.0) == doctest::Approx(-1.0));

    const auto c = ReactionFn::cubic(1.0, 0.3);
    CHECK(std::abs(c(0.3)) < 1e-15);
    REQUIRE(c.roots().size() == 3);
    CHECK(c.roots()[1] == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("reaction invariants") {
    for (const auto& f : {ReactionFn::quadratic(2.0), ReactionFn::cubic(3.0, 0.7),
                          ReactionFn::polynomial({0.0, -0.04, 0.74, -3.5, 5.0, -2.2})}) {
        const auto& r = f.roots();
        REQUIRE(r.size() >= 2);
        CHECK(r.front() == 0.0);
        CHECK(r.back() == 1.0);
        for (std::size_t i = 0; i < r.size(); ++i) {
            CHECK(std::abs(f(r[i])) <= 1e-12);
            CHECK(f.derivative(r[i]) != 0.0);
            if (i > 0) CHECK(r[i] > r[i - 1]);
        }
    }
}

TEST_CASE("reaction construction errors") {
    CHECK(error_code([] { ReactionFn::quadratic(0.0); }) == ErrorCode::degenerate_reaction);
    CHECK(error_code([] { ReactionFn::cubic(1.0, 1.2); }) == ErrorCode::invalid_argument);
    // f(1) != 0
    CHECK(error_code([] { ReactionFn::polynomial({0.0, 1.0}); }) == ErrorCode::assumption_violation);
    // double root at 0.5
    CHECK(error_code([] { ReactionFn::polynomial({0.0, 0.25, -1.25, 2.0, -1.0}); }) ==
          ErrorCode::degenerate_reaction);
    CHECK(error_code([] { make_model(0.0, 1.0, 0.0, 0.0, ReactionFn::quadratic(1.0)); }) ==
          ErrorCode::invalid_argument);
}

TEST_CASE("growth-rate reaction") {
    const auto f = reaction_from_growth_rates(2.0, 1.0);
    CHECK(f == ReactionFn::quadratic(1.0));
    CHECK(error_code([] { reaction_from_growth_rates(1.0, 1.0); }) == ErrorCode::degenerate_reaction);
    const auto g = reaction_from_growth_rates(0.0, 1.0);
    CHECK(g.kind() == ReactionKind::quadratic);
    CHECK(g.k() == -1.0);
    CHECK(g.sign_flagged());
}

TEST_CASE("logistic reaction") {
    const auto f = reaction_from_logistic(1.0, 1.0, 0.5, 0.5);
    REQUIRE(f.roots().size() == 3);
    CHECK(f.roots()[1] == doctest::Approx(0.5).epsilon(1e-12));
    // Equal rates and capacities: f = (2r/alpha) p (1 - p)(1/2 - p), so f'(0) > 0.
    CHECK(f.derivative(0.0) == doctest::Approx(2.0));
    CHECK(f(0.25) == doctest::Approx(4.0 * 0.25 * 0.75 * 0.25));

    const auto limit = reaction_from_logistic(2.0, 1.0, 1e8, 1e8);
    const auto& a = limit.poly().coeffs();
    const auto& b = ReactionFn::quadratic(1.0).poly().coeffs();
    REQUIRE(a.size() >= b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - (i < b.size() ? b[i] : 0.0)) <= 1e-6);

    const double inf = std::numeric_limits<double>::infinity();
    CHECK(reaction_from_logistic(2.0, 1.0, inf, inf).poly() == ReactionFn::quadratic(1.0).poly());
    CHECK(error_code([] { reaction_from_logistic(1.0, 1.0, 0.0, 1.0); }) == ErrorCode::invalid_argument);
}

TEST_CASE("potential derivative is the reaction") {
    const auto f = ReactionFn::cubic(2.0, 0.4);
    const auto F = potential(f);
    CHECK(F(0.0) == 0.0);
    const auto dF = F.antiderivative.derivative();
    REQUIRE(dF.coeffs().size() == f.poly().coeffs().size());
    for (std::size_t i = 0; i < dF.coeffs().size(); ++i)
        CHECK(dF.coeffs()[i] == doctest::Approx(f.poly().coeffs()[i]).epsilon(1e-14));
}

TEST_CASE("linearization examples") {
    const auto m = unit_quadratic();
    const auto e2 = linearize(m, 2.0, 0.0);
    CHECK(e2.lambda_plus.real() == doctest::Approx(-1.0));
    CHECK(e2.lambda_minus.real() == doctest::Approx(-1.0));
    CHECK(e2.etype == EquilibriumType::stable_node);

    const auto e3 = linearize(m, 3.0, 0.0);
    CHECK(e3.lambda_plus.real() == doctest::Approx((-3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));
    CHECK(e3.lambda_minus.real() == doctest::Approx((-3.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-12));
    CHECK(e3.real_eigenvalues());

    const auto e0 = linearize(m, 0.0, 1.0);
    CHECK(e0.lambda_plus.real() == doctest::Approx(1.0));
    CHECK(e0.lambda_minus.real() == doctest::Approx(-1.0));
    CHECK(e0.etype == EquilibriumType::saddle);

    CHECK(error_code([&] { linearize(m, 1.0, 0.5); }) == ErrorCode::not_equilibrium);
}

TEST_CASE("Vieta identities and type table") {
    const double speeds[] = {-4.0, -1.0, 0.0, 0.5, 1.9, 2.0, 2.1, 3.0, 7.0};
    for (const auto& m : {unit_quadratic(), make_model(0.5, 2.0, -1.0, 3.0, ReactionFn::quadratic(2.0)),
                          make_model(1.0, 3.0, 1.0, 0.0, ReactionFn::cubic(1.0, 0.3))}) {
        for (double p : m.reaction.roots()) {
            for (double c : speeds) {
                const auto e = linearize(m, c, p);
                const auto sum = e.lambda_plus + e.lambda_minus;
                const auto prod = e.lambda_plus * e.lambda_minus;
                CHECK(std::abs(sum - e.beta) <= 1e-12);
                CHECK(std::abs(prod - e.alpha) <= 1e-12);
                CHECK(e.lambda_plus.real() >= e.lambda_minus.real());
                if (e.alpha < 0.0) CHECK(e.etype == EquilibriumType::saddle);
                if (e.alpha > 0.0 && e.beta <= 0.0 && e.beta * e.beta >= 4.0 * e.alpha)
                    CHECK(e.etype == EquilibriumType::stable_node);
                if (e.alpha > 0.0 && e.beta < 0.0 && e.beta * e.beta < 4.0 * e.alpha)
                    CHECK(e.etype == EquilibriumType::spiral_sink);
            }
        }
    }
}

TEST_CASE("non-oscillatory node iff outside the pulled band") {
    const auto m = make_model(1.5, 0.5, 0.7, 2.0, ReactionFn::quadratic(2.0));
    const double band = 2.0 * std::sqrt(2.0 * 1.5);
    for (double dc : {-2.0, -1e-3, 1e-3, 2.0}) {
        CHECK(linearize(m, 0.7 + band + dc, 0.0).real_eigenvalues() == (dc > 0.0));
        CHECK(linearize(m, 0.7 - band - dc, 0.0).real_eigenvalues() == (dc > 0.0));
    }
}

TEST_CASE("sym1") {
    const auto m = make_model(1.0, 2.0, 0.5, 3.0, ReactionFn::quadratic(1.0));
    const auto s = apply_sym1(m);
    CHECK(s.reaction.poly() == ReactionFn::quadratic(-1.0).poly());
    CHECK(s.d1 == 2.0);
    CHECK(s.d2 == 1.0);
    CHECK(s.m1 == 3.0);
    CHECK(s.m2 == 0.5);
    CHECK(apply_sym1(s) == m);

    const auto c = apply_sym1(make_model(1.0, 1.0, 0.0, 0.0, ReactionFn::cubic(1.0, 0.3)));
    REQUIRE(c.reaction.roots().size() == 3);
    CHECK(c.reaction.roots()[1] == doctest::Approx(0.7).epsilon(1e-12));

    const auto poly = make_model(1.0, 1.5, -1.0, 2.0, ReactionFn::polynomial({0.0, -0.04, 0.74, -3.5, 5.0, -2.2}));
    CHECK(apply_sym1(apply_sym1(poly)) == poly);
    for (double p : {0.1, 0.35, 0.8}) CHECK(apply_sym1(poly).reaction(p) == doctest::Approx(-poly.reaction(1.0 - p)));
}

TEST_CASE("sym2") {
    const auto m = unit_quadratic(1.0, 3.0);
    const auto s = apply_sym2(m);
    CHECK(s.m1 == -1.0);
    CHECK(s.m2 == -3.0);
    CHECK(apply_sym2(s) == m);
    CHECK(apply_sym2(unit_quadratic()) == unit_quadratic());
}

TEST_CASE("config round trip") {
    const GfkppModel models[] = {
        make_model(0.1, 2.0 / 3.0, -1e-7, 4.0, ReactionFn::quadratic(0.3)),
        make_model(1.0, 1.0, 0.0, 0.0, ReactionFn::cubic(1.0, 0.25)),
        make_model(1.0, 1.0, 0.5, 0.0, ReactionFn::polynomial({0.0, -0.04, 0.74, -3.5, 5.0, -2.2})),
    };
    for (const auto& m : models) CHECK(model_from_config(KeyValueConfig::parse(model_to_config(m))) == m);

    const auto cfg = KeyValueConfig::parse("d2 = 2   # comment\n[reaction]\nkind = cubic\np0 = 0.4\n");
    const auto m = model_from_config(cfg);
    CHECK(m.d2 == 2.0);
    CHECK(m.reaction.kind() == ReactionKind::cubic);
    CHECK(m.reaction.p0() == 0.4);

    CHECK(error_code([] { KeyValueConfig::parse("d1 2"); }) == ErrorCode::parse);
    CHECK(error_code([] { model_from_config(KeyValueConfig::parse("d1 = 1,5")); }) == ErrorCode::parse);
    CHECK(error_code([] { model_from_config(KeyValueConfig::parse("reaction.kind = cubic")); }) == ErrorCode::parse);
}

TEST_CASE("number formatting and ranges") {
    CHECK(format_sig(2.0, 6) == "2.0");
    CHECK(format_sig(std::sqrt(0.5) * 0.5, 6) == "0.353553");
    CHECK(format_sig(-0.0, 6) == "0.0");
    CHECK(format_sig(2.4999995, 6) == "2.5");
    CHECK(parse_number(" 1e-3 ") == 1e-3);
    CHECK(parse_number("+2.5") == 2.5);

    const auto r = parse_range("0:1:0.25");
    REQUIRE(r.size() == 5);
    CHECK(r.back() == 1.0);
    CHECK(parse_range("0:10:0.1").size() == 101);
    CHECK(parse_range("0.5,1,2") == std::vector<double>{0.5, 1.0, 2.0});
    CHECK(parse_range("3") == std::vector<double>{3.0});
    CHECK(error_code([] { parse_range("1:0:1"); }) == ErrorCode::invalid_argument);
    CHECK(error_code([] { parse_range("0:1"); }) == ErrorCode::parse);
}
