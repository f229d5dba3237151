// Acceptance runner: one PASS/FAIL line per criterion. Exits nonzero only when
// a criterion outside the --known-failure list fails.

#include "gfkpp/error.hpp"
#include "gfkpp/model.hpp"
#include "gfkpp/model_io.hpp"
#include "gfkpp/pdesim.hpp"
#include "gfkpp/shooting.hpp"
#include "gfkpp/speed.hpp"
#include "gfkpp/sweep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace gfkpp;

namespace {

// Collects sub-check failures and a short summary for the result line.
class Report {
public:
    void check(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    void note(const std::string& text) { notes_.push_back(text); }
    bool passed() const { return failures_.empty(); }
    std::string text() const {
        std::ostringstream os;
        const char* sep = "";
        for (const auto& n : notes_) {
            os << sep << n;
            sep = "; ";
        }
        for (const auto& f : failures_) {
            os << sep << "FAILED " << f;
            sep = "; ";
        }
        return os.str();
    }

private:
    std::vector<std::string> notes_;
    std::vector<std::string> failures_;
};

std::string num(double v, int digits = 6) { return format_sig(v, digits); }

GfkppModel quadratic(double k, double d1, double d2, double m1, double m2) {
    return make_model(d1, d2, m1, m2, ReactionFn::quadratic(k));
}

struct PdeRun {
    double speed = 0.0;
    double residual = 0.0;
};

PdeRun front_run(const GfkppModel& m, int n_cells, double t_end) {
    const Grid1D g{-50.0, 250.0, n_cells};
    const auto frames = simulate_gfkpp(m, g, smoothed_step(g, 0.0), t_end, 1.0);
    const auto trace = measure_front_speed(frames, g);
    return {trace.speed, trace.residual};
}

// The pulled benchmark at n = 4096 feeds both the PDE criterion and grid convergence.
const PdeRun& pulled_run_4096() {
    static const PdeRun run = front_run(quadratic(1.0, 1.0, 1.0, 0.0, 0.0), 4096, 100.0);
    return run;
}

void closed_form_oracle(Report& r) {
    double worst = 0.0;
    int points = 0;
    for (double k : {0.5, 1.0, 2.0})
        for (double d : {0.5, 1.0, 2.0})
            for (double m : {0.0, 1.0, 2.0, 3.0, 5.0, 10.0}) {
                const auto model = quadratic(k, d, d, 0.0, m);
                const double dc =
                    std::abs(minimal_speed_numeric(model).c_star - closed_form_quadratic(model).c_star);
                worst = std::max(worst, dc);
                ++points;
                r.check(dc <= 1e-4, "k=" + num(k) + " D=" + num(d) + " m=" + num(m) + " |dc|=" + num(dc));
            }
    r.note(std::to_string(points) + " points, max |dc| = " + num(worst, 3));
}

void cubic_oracle(Report& r) {
    double worst = 0.0;
    int points = 0;
    for (double p0 : {0.1, 0.25, 0.5, 0.75})
        for (double m : {0.0, 1.0, 3.0}) {
            const auto model = make_model(1.0, 1.0, 0.0, m, ReactionFn::cubic(1.0, p0));
            const double dc = std::abs(unique_speed_bistable(model, 1.0, p0, 0.0).c_star -
                                       closed_form_cubic(model).speeds.c_star);
            worst = std::max(worst, dc);
            ++points;
            r.check(dc <= 1e-4, "p0=" + num(p0) + " m=" + num(m) + " |dc|=" + num(dc));
        }
    r.note(std::to_string(points) + " points, max |dc| = " + num(worst, 3));
}

void sweep_ordering(Report& r) {
    const std::vector<double> d2s{0.5, 1.0, 2.0};
    const auto ms = range_grid(0.0, 10.0, 0.1);
    const auto rows = sweep_m2({}, d2s, ms, 0);
    const std::size_t n = ms.size();
    double worst = 0.0;
    std::string misordered;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& low = rows[j];
        const auto& mid = rows[n + j];
        const auto& high = rows[2 * n + j];
        for (const auto* row : {&low, &mid, &high})
            if (row->error) r.check(false, "d2=" + num(row->d2) + " m=" + num(row->m) + ": " + *row->error);
        if (low.error || mid.error || high.error) continue;
        const double dc = std::abs(mid.c_star - closed_form_quadratic(ModelTemplate{}.at(1.0, mid.m)).c_star);
        worst = std::max(worst, dc);
        r.check(dc <= 1e-4, "D2=1 m=" + num(mid.m) + " |dc|=" + num(dc));
        if (mid.m >= 3.0 - 1e-9 && !(low.c_star > mid.c_star && mid.c_star > high.c_star))
            misordered += " " + num(mid.m);
    }
    r.check(misordered.empty(), "ordering D2=0.5 > 1 > 2 fails at m =" + misordered);
    r.note(std::to_string(rows.size()) + " rows, D2=1 max |dc| = " + num(worst, 3));
}

void transition_slopes(Report& r) {
    auto scan = [](const std::vector<double>& d2s) {
        return parallel_map(d2s.size(), 0, [&](std::size_t i) -> std::optional<double> {
            try {
                return transition_scan(d2s[i]).m_trans;
            } catch (const Error&) {
                return std::nullopt;
            }
        });
    };
    auto fit = [&](const std::vector<double>& d2s, const char* label, double target, double tol) {
        const auto m = scan(d2s);
        std::vector<double> xs;
        std::vector<double> ys;
        for (std::size_t i = 0; i < d2s.size(); ++i)
            if (m[i]) {
                xs.push_back(d2s[i]);
                ys.push_back(*m[i]);
            }
        const std::size_t missing = d2s.size() - xs.size();
        if (xs.size() < 2) {
            r.check(false, std::string(label) + " slope: " + std::to_string(missing) + " of " +
                               std::to_string(d2s.size()) + " points have no transition");
            return;
        }
        const double slope = fit_line(xs, ys).slope;
        r.note(std::string(label) + " slope " + num(slope, 4) + " (target " + num(target) + ")");
        r.check(missing == 0, std::string(label) + ": " + std::to_string(missing) + " points without transition");
        r.check(std::abs(slope - target) <= tol, std::string(label) + " slope");
    };
    fit(range_grid(0.5, 3.0, 0.25), "D2 in [0.5, 3]", -0.224, 0.03);
    fit(range_grid(10.0, 20.0, 1.0), "D2 in [10, 20]", 0.2791, 0.05);

    const auto d2s = range_grid(3.0, 5.0, 0.25);
    const auto m = scan(d2s);
    bool reversal = false;
    for (std::size_t i = 1; i < m.size(); ++i)
        if (m[i] && m[i - 1] && *m[i] > *m[i - 1]) reversal = true;
    r.check(reversal, "no increase of m_trans in D2 in [3, 5]");
}

void asymptotic_slopes(Report& r) {
    const std::vector<double> d2s{0.3, 0.5, 1.0, 2.0, 3.0};
    const auto ks = parallel_map(d2s.size(), 0, [&](std::size_t i) { return asymptotic_slope(d2s[i]); });
    r.note("K(1) = " + num(ks[2]));
    r.check(std::abs(ks[2] - 0.5008) <= 1e-3, "K(1)");
    for (std::size_t i = 1; i < ks.size(); ++i) r.check(ks[i] < ks[i - 1], "K not decreasing at D2=" + num(d2s[i]));
    std::vector<double> logs;
    for (double d : d2s) logs.push_back(std::log(d));
    const double r2 = fit_line(logs, ks).r_squared;
    r.note("R^2 vs log D2 = " + num(r2, 5));
    r.check(r2 >= 0.98, "R^2");
}

void pde_cross_validation(Report& r) {
    const auto pushed = front_run(quadratic(1.0, 1.0, 1.0, 0.0, 4.0), 4096, 80.0);
    r.note("pushed c_emp = " + num(pushed.speed));
    r.check(std::abs(pushed.speed - 2.5) <= 0.02 * 2.5, "pushed speed");
    const auto& pulled = pulled_run_4096();
    r.note("pulled c_emp = " + num(pulled.speed));
    r.check(pulled.speed >= 1.90 && pulled.speed <= 2.00, "pulled speed");
}

void consistency(Report& r) {
    const Grid1D g{-20.0, 20.0, 1024};
    const std::vector<double> n1(g.n_cells, 0.3);
    const std::vector<double> n2(g.n_cells, 0.7);
    const auto full = simulate_two_species({1.0, 0.5, 1.0}, {1.0, 0.5, 0.0}, g, n1, n2, 10.0, 0.5);
    const auto reduced =
        simulate_gfkpp(make_model(1.0, 1.0, 0.5, 0.5, reaction_from_growth_rates(1.0, 0.0)), g, n1, 10.0, 0.5);
    const double dev = consistency_deviation(full, reduced);
    r.note("sup deviation = " + num(dev, 3));
    r.check(dev <= 1e-6, "deviation");
}

void property_suites(Report& r) {
    const GfkppModel models[] = {quadratic(1.0, 1.0, 2.0, 0.0, 3.0), quadratic(2.0, 0.5, 1.0, 0.3, 0.0),
                                 quadratic(-1.0, 2.0, 1.0, 1.0, -1.0),
                                 make_model(1.0, 1.5, 0.0, 1.0, ReactionFn::cubic(1.0, 0.3))};

    int vieta = 0;
    for (const auto& m : models)
        for (double p : m.reaction.roots())
            for (double c : {-3.0, 0.0, 1.0, 2.0, 2.5, 6.0}) {
                const auto e = linearize(m, c, p);
                const bool ok = std::abs(e.lambda_plus + e.lambda_minus - e.beta) <= 1e-12 &&
                                std::abs(e.lambda_plus * e.lambda_minus - e.alpha) <= 1e-12;
                vieta += ok ? 0 : 1;
            }
    r.check(vieta == 0, "Vieta identities");

    for (const auto& m : models) {
        r.check(apply_sym1(apply_sym1(m)) == m && apply_sym2(apply_sym2(m)) == m, "involutions");
        const auto a = typea_speed_set(m);
        const auto b = negate(type_b_speed_set(apply_sym2(m)));
        r.check(a.regime == b.regime && std::abs(a.c_star - b.c_star) <= 1e-6, "speed-set mirroring");
    }

    for (const auto& m : models) {
        const double base = typea_speed_set(m).c_star;
        for (double shift : {-2.0, 1.0, 5.0}) {
            auto s = m;
            s.m1 += shift;
            s.m2 += shift;
            r.check(std::abs(typea_speed_set(s).c_star - (base + shift)) <= 1e-6, "Galilean shift");
        }
    }

    for (double s : {0.5, 2.0}) {
        const auto m = quadratic(1.0, 1.0, 2.0, 0.0, 3.0);
        const auto scaled = quadratic(s * s, 1.0, 2.0, 0.0, 3.0 * s);
        r.check(std::abs(minimal_speed_numeric(scaled).c_star - s * minimal_speed_numeric(m).c_star) <= 1e-6 * s,
                "scaling law");
    }

    for (double d2 : {0.25, 1.0, 4.0})
        for (double m2 : {-3.0, 0.0, 2.0, 6.0}) {
            const auto m = quadratic(1.5, 0.7, d2, 0.4, m2);
            r.check(minimal_speed_numeric(m).c_star >= linear_spreading_speed(m) - 1e-6, "lower bound");
        }

    {
        const auto m = make_model(1.0, 1.0, 0.0, 1.0, ReactionFn::cubic(1.0, 0.25));
        int changes = 0;
        bool monotone = true;
        std::optional<double> prev;
        for (double c = -1.0; c <= 2.5 + 1e-12; c += 0.05) {
            double w = 0.0;
            try {
                w = section_gap(m, c, 1.0, 0.25, 0.0);
            } catch (const Error&) {
                continue;
            }
            if (prev) {
                monotone = monotone && w > *prev;
                if ((w > 0.0) != (*prev > 0.0)) ++changes;
            }
            prev = w;
        }
        r.check(monotone && changes == 1, "w(c) single sign change");
    }

    {
        const Grid1D g{-10.0, 30.0, 512};
        const auto frames = simulate_gfkpp(make_model(1.0, 0.3, -1.0, 2.0, ReactionFn::cubic(1.0, 0.3)), g,
                                           smoothed_step(g, 0.0), 10.0, 0.5);
        bool inside = true;
        for (const auto& f : frames)
            for (double v : f.p) inside = inside && v >= -kBoxTolerance && v <= 1.0 + kBoxTolerance;
        r.check(inside, "box preservation");
    }

    const auto coarse = front_run(quadratic(1.0, 1.0, 1.0, 0.0, 0.0), 2048, 100.0);
    const double fine = pulled_run_4096().speed;
    const double rel = std::abs(coarse.speed - fine) / fine;
    r.note("grid convergence " + num(rel * 100.0, 3) + "%");
    r.check(rel < 0.01, "grid convergence");
}

struct Criterion {
    const char* name;
    double limit_s;
    std::function<void(Report&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gFKPP acceptance criteria"};
    std::vector<std::string> known;
    app.add_option("--known-failure", known, "criterion expected to fail");
    CLI11_PARSE(app, argc, argv);
    const std::set<std::string> expected(known.begin(), known.end());

    const std::vector<Criterion> criteria{
        {"closed_form_oracle", 30.0, closed_form_oracle},
        {"cubic_oracle", 30.0, cubic_oracle},
        {"sweep_ordering", 300.0, sweep_ordering},
        {"transition_slopes", 900.0, transition_slopes},
        {"asymptotic_slopes", 600.0, asymptotic_slopes},
        {"pde_cross_validation", 360.0, pde_cross_validation},
        {"consistency", 120.0, consistency},
        {"property_suites", 240.0, property_suites},
    };

    int unexpected = 0;
    for (const auto& c : criteria) {
        Report report;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(report);
        } catch (const std::exception& e) {
            report.check(false, std::string("exception: ") + e.what());
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.check(elapsed <= c.limit_s, "runtime limit " + num(c.limit_s) + " s");
        const bool pass = report.passed();
        const bool known_failure = expected.count(c.name) > 0;
        if (!pass && !known_failure) ++unexpected;
        std::cout << (pass ? "PASS " : "FAIL ") << c.name << (known_failure && !pass ? " (known)" : "") << " ["
                  << num(elapsed, 3) << " s] " << report.text() << std::endl;
    }
    return unexpected == 0 ? 0 : 1;
}
