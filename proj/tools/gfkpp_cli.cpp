// Command-line front end over the gfkpp C API.
#include "gfkpp/gfkpp.h"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitParse = 1;
constexpr int kExitSolver = 2;

struct Failure {
    int exit_code;
    std::string message;
};

void check(gfkpp_status s, int exit_code, const std::string& context) {
    if (s != GFKPP_OK) throw Failure{exit_code, context + ": " + gfkpp_status_name(s) + ": " + gfkpp_last_error()};
}

void parse_check(gfkpp_status s, const std::string& context) { check(s, kExitParse, context); }
void solver_check(gfkpp_status s, const std::string& context) { check(s, kExitSolver, context); }

std::string fmt(double v, int digits) {
    char buf[64];
    if (gfkpp_format(v, digits, buf, sizeof buf) != GFKPP_OK) return "nan";
    return buf;
}

using ModelPtr = std::unique_ptr<gfkpp_model, decltype(&gfkpp_model_free)>;
using ConfigPtr = std::unique_ptr<gfkpp_config, decltype(&gfkpp_config_free)>;
using FramesPtr = std::unique_ptr<gfkpp_frames, decltype(&gfkpp_frames_free)>;
using TrajectoryPtr = std::unique_ptr<gfkpp_trajectory, decltype(&gfkpp_trajectory_free)>;

struct GlobalOptions {
    std::string config_path;
    std::string out;
    unsigned jobs = 0;
    bool cubic = false;
    // Model flags, kept as text and applied as config overrides.
    std::map<std::string, std::string> overrides;
};

struct Context {
    ConfigPtr cfg{nullptr, gfkpp_config_free};

    std::optional<double> number(const std::string& key) const {
        double v = 0.0;
        int found = 0;
        parse_check(gfkpp_config_get_number(cfg.get(), key.c_str(), &v, &found), "config key " + key);
        if (!found) return std::nullopt;
        if (!std::isfinite(v)) throw Failure{kExitParse, "config key " + key + " must be finite"};
        return v;
    }

    double number_or(const std::string& key, double fallback) const { return number(key).value_or(fallback); }

    std::optional<std::string> text(const std::string& key) const {
        const char* s = nullptr;
        parse_check(gfkpp_config_get_string(cfg.get(), key.c_str(), &s), "config key " + key);
        if (s == nullptr) return std::nullopt;
        return std::string(s);
    }

    void set(const std::string& key, const std::string& value) {
        parse_check(gfkpp_config_set(cfg.get(), key.c_str(), value.c_str()), "option " + key);
    }

    ModelPtr model() const {
        gfkpp_model* m = nullptr;
        parse_check(gfkpp_model_from_config(cfg.get(), &m), "model");
        return ModelPtr(m, gfkpp_model_free);
    }
};

Context make_context(const GlobalOptions& g) {
    Context ctx;
    gfkpp_config* cfg = nullptr;
    if (g.config_path.empty())
        parse_check(gfkpp_config_parse("", &cfg), "config");
    else
        parse_check(gfkpp_config_load(g.config_path.c_str(), &cfg), "config " + g.config_path);
    ctx.cfg.reset(cfg);
    for (const auto& [key, value] : g.overrides) ctx.set(key, value);
    if (g.cubic) ctx.set("reaction.kind", "cubic");
    else if (g.overrides.count("reaction.coeffs")) ctx.set("reaction.kind", "polynomial");
    else if (g.overrides.count("reaction.p0") && !ctx.text("reaction.kind")) ctx.set("reaction.kind", "cubic");
    return ctx;
}

std::vector<double> parse_range(const std::string& text, const std::string& what) {
    size_t count = 0;
    const gfkpp_status s = gfkpp_parse_range(text.c_str(), nullptr, 0, &count);
    if (s != GFKPP_OK && s != GFKPP_E_BUFFER_TOO_SMALL) parse_check(s, what);
    std::vector<double> out(count);
    parse_check(gfkpp_parse_range(text.c_str(), out.data(), out.size(), &count), what);
    return out;
}

// Writes to --out when given, otherwise to standard output.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (path.empty() || path == "-") return;
        file_.open(path);
        if (!file_) throw Failure{kExitParse, "cannot open " + path + " for writing"};
    }
    std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
    bool to_file() const { return file_.is_open(); }

private:
    std::ofstream file_;
};

std::string speed_row(gfkpp_case c, const gfkpp_speed_set& s, bool with_front) {
    std::ostringstream os;
    os << gfkpp_case_name(c) << ',' << gfkpp_regime_name(s.regime);
    if (s.regime != GFKPP_REGIME_EMPTY) os << ',' << fmt(s.c_star, 6);
    if (s.has_secondary) os << ',' << fmt(s.c_secondary, 6);
    if (with_front) os << ',' << gfkpp_front_name(s.front);
    return os.str();
}

int cmd_speed(const GlobalOptions& g, bool type_b, bool with_front) {
    const Context ctx = make_context(g);
    const ModelPtr m = ctx.model();
    gfkpp_case c{};
    solver_check(gfkpp_classify(m.get(), &c), "classify");
    gfkpp_speed_set s{};
    solver_check(type_b ? gfkpp_speed_type_b(m.get(), &s) : gfkpp_speed_type_a(m.get(), &s), "speed");
    Sink sink(g.out);
    sink.os() << speed_row(c, s, with_front) << '\n';
    return 0;
}

int cmd_existence(const GlobalOptions& g) {
    const Context ctx = make_context(g);
    const ModelPtr m = ctx.model();
    gfkpp_case c{};
    solver_check(gfkpp_classify(m.get(), &c), "classify");
    Sink sink(g.out);
    sink.os() << gfkpp_case_name(c) << '\n';
    return 0;
}

int cmd_cubic(const GlobalOptions& g) {
    const Context ctx = make_context(g);
    const ModelPtr m = ctx.model();
    gfkpp_speed_set s{};
    double zeta = 0.0;
    solver_check(gfkpp_closed_form_cubic(m.get(), &s, &zeta), "cubic closed form");
    Sink sink(g.out);
    sink.os() << "c_star,zeta\n" << fmt(s.c_star, 12) << ',' << fmt(zeta, 12) << '\n';
    return 0;
}

struct FamilyBase {
    double k;
    double d1;
    double m1;
};

FamilyBase family(const Context& ctx) {
    const auto kind = ctx.text("reaction.kind").value_or("quadratic");
    if (kind != "quadratic") throw Failure{kExitParse, "sweeps use the quadratic reaction; got " + kind};
    return {ctx.number_or("reaction.k", 1.0), ctx.number_or("d1", 1.0), ctx.number_or("m1", 0.0)};
}

std::string range_option(const Context& ctx, const std::string& flag, const std::string& key,
                         const std::string& fallback) {
    if (!flag.empty()) return flag;
    return ctx.text(key).value_or(fallback);
}

unsigned jobs_option(const GlobalOptions& g, const Context& ctx, const std::string& section) {
    if (g.jobs > 0) return g.jobs;
    return static_cast<unsigned>(std::max(0.0, ctx.number_or(section + ".jobs", 0.0)));
}

int cmd_sweep_m2(const GlobalOptions& g, const std::string& d2_flag, const std::string& m_flag) {
    const Context ctx = make_context(g);
    const FamilyBase b = family(ctx);
    const auto d2s = parse_range(range_option(ctx, d2_flag, "sweep.d2_range", "0.5,1,2"), "--d2-range");
    const auto ms = parse_range(range_option(ctx, m_flag, "sweep.m2_range", "0:10:0.1"), "--m2-range");
    const size_t n = d2s.size() * ms.size();
    std::vector<double> c(n);
    std::vector<gfkpp_front> front(n);
    std::vector<gfkpp_status> status(n);
    solver_check(gfkpp_sweep_m2(b.k, b.d1, b.m1, d2s.data(), d2s.size(), ms.data(), ms.size(),
                                jobs_option(g, ctx, "sweep"), c.data(), front.data(), status.data()),
                 "sweep");
    Sink sink(g.out);
    auto& os = sink.os();
    os << "d2,m2_minus_m1,c_star,regime\n";
    int errors = 0;
    for (size_t i = 0; i < n; ++i) {
        os << fmt(d2s[i / ms.size()], 12) << ',' << fmt(ms[i % ms.size()], 12) << ',';
        if (status[i] == GFKPP_OK) {
            os << fmt(c[i], 12) << ',' << gfkpp_front_name(front[i]) << '\n';
        } else {
            os << ",error\n";
            ++errors;
        }
    }
    if (errors) std::cerr << errors << " grid points failed\n";
    return errors ? kExitSolver : 0;
}

// Least-squares fit over the rows with x in [lo, hi]; nullopt with fewer than two.
std::optional<std::array<double, 3>> fit_window(const std::vector<double>& x, const std::vector<double>& y,
                                                const std::vector<gfkpp_status>& status, double lo, double hi,
                                                bool log_x) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (size_t i = 0; i < x.size(); ++i) {
        if (status[i] != GFKPP_OK || x[i] < lo - 1e-12 || x[i] > hi + 1e-12) continue;
        xs.push_back(log_x ? std::log(x[i]) : x[i]);
        ys.push_back(y[i]);
    }
    std::array<double, 3> f{};
    if (xs.size() < 2 || gfkpp_fit_line(xs.data(), ys.data(), xs.size(), &f[0], &f[1], &f[2]) != GFKPP_OK)
        return std::nullopt;
    return f;
}

int write_scan(const GlobalOptions& g, const std::vector<double>& d2s, const std::vector<double>& values,
               const std::vector<gfkpp_status>& status, const std::string& column) {
    Sink sink(g.out);
    auto& os = sink.os();
    os << "d2," << column << '\n';
    int errors = 0;
    for (size_t i = 0; i < d2s.size(); ++i) {
        os << fmt(d2s[i], 12) << ',';
        if (status[i] == GFKPP_OK) {
            os << fmt(values[i], 12) << '\n';
        } else {
            os << "error\n";
            ++errors;
        }
    }
    if (errors) std::cerr << errors << " d2 values failed\n";
    return errors;
}

void write_fit(std::ostream& os, const std::string& label, const std::optional<std::array<double, 3>>& f) {
    if (!f) return;
    os << "# " << label << " slope=" << fmt((*f)[0], 12) << " intercept=" << fmt((*f)[1], 12)
       << " r2=" << fmt((*f)[2], 12) << '\n';
}

int cmd_transition(const GlobalOptions& g, const std::string& d2_flag) {
    const Context ctx = make_context(g);
    const FamilyBase b = family(ctx);
    const auto d2s = parse_range(range_option(ctx, d2_flag, "transition.d2_range", "0.5:3:0.25"), "--d2-range");
    std::vector<double> mt(d2s.size());
    std::vector<gfkpp_status> status(d2s.size());
    solver_check(gfkpp_transition_scan(b.k, b.d1, b.m1, d2s.data(), d2s.size(), jobs_option(g, ctx, "transition"),
                                       mt.data(), status.data()),
                 "transition");
    const int errors = write_scan(g, d2s, mt, status, "m_trans");
    std::ostringstream fits;
    write_fit(fits, "fit m_trans vs d2 over [0.5, 3]", fit_window(d2s, mt, status, 0.5, 3.0, false));
    write_fit(fits, "fit m_trans vs d2 over [10, 20]", fit_window(d2s, mt, status, 10.0, 20.0, false));
    if (!g.out.empty()) {
        std::ofstream os(g.out, std::ios::app);
        os << fits.str();
    } else {
        std::cout << fits.str();
    }
    return errors ? kExitSolver : 0;
}

int cmd_slope(const GlobalOptions& g, const std::string& d2_flag) {
    const Context ctx = make_context(g);
    const FamilyBase b = family(ctx);
    const auto d2s = parse_range(range_option(ctx, d2_flag, "slope.d2_range", "0.3:3:0.1"), "--d2-range");
    std::vector<double> k(d2s.size());
    std::vector<gfkpp_status> status(d2s.size());
    solver_check(gfkpp_asymptotic_slope(b.k, b.d1, b.m1, d2s.data(), d2s.size(), jobs_option(g, ctx, "slope"),
                                        k.data(), status.data()),
                 "slope");
    const int errors = write_scan(g, d2s, k, status, "K");
    std::ostringstream fits;
    write_fit(fits, "fit K vs log(d2) over [0.3, 3]", fit_window(d2s, k, status, 0.3, 3.0, true));
    if (!g.out.empty()) {
        std::ofstream os(g.out, std::ios::app);
        os << fits.str();
    } else {
        std::cout << fits.str();
    }
    return errors ? kExitSolver : 0;
}

struct PdeOptions {
    std::optional<int> grid_n;
    std::optional<double> t_end;
    std::optional<double> save_every;
    std::optional<double> x_min;
    std::optional<double> x_max;
    std::string front_out;
};

template <class T>
T pick(const std::optional<T>& flag, const Context& ctx, const std::string& key, T fallback) {
    if (flag) return *flag;
    return static_cast<T>(ctx.number_or(key, static_cast<double>(fallback)));
}

std::string comment_for(const ModelPtr& m) {
    size_t needed = 0;
    gfkpp_model_to_config(m.get(), nullptr, 0, &needed);
    std::string text(needed + 1, '\0');
    parse_check(gfkpp_model_to_config(m.get(), text.data(), text.size(), &needed), "model");
    text.resize(needed);
    return text;
}

int cmd_pde(const GlobalOptions& g, const PdeOptions& o) {
    const Context ctx = make_context(g);
    const ModelPtr m = ctx.model();
    const double t_end = pick(o.t_end, ctx, "pde.t_end", 80.0);
    const double save_every = pick(o.save_every, ctx, "pde.save_every", 1.0);
    const int n = pick(o.grid_n, ctx, "pde.grid_n", 4096);

    // Leave room for the expected front travel.
    double c_expected = 0.0;
    gfkpp_speed_set s{};
    if (gfkpp_speed_type_a(m.get(), &s) == GFKPP_OK && s.regime != GFKPP_REGIME_EMPTY) c_expected = s.c_star;
    const gfkpp_grid grid{pick(o.x_min, ctx, "pde.x_min", std::min(-50.0, -1.25 * std::max(0.0, -c_expected) * t_end)),
                          pick(o.x_max, ctx, "pde.x_max", std::max(250.0, 1.25 * std::max(0.0, c_expected) * t_end)),
                          n};

    gfkpp_frames* raw = nullptr;
    solver_check(gfkpp_simulate_step(m.get(), grid, 0.0, t_end, save_every, &raw), "simulate");
    const FramesPtr frames(raw, gfkpp_frames_free);
    const std::string comment = comment_for(m);
    if (!g.out.empty()) solver_check(gfkpp_frames_write_csv(frames.get(), g.out.c_str(), comment.c_str()), "frames");
    if (!o.front_out.empty())
        solver_check(gfkpp_front_write_csv(frames.get(), 0.5, 0.5, o.front_out.c_str(), comment.c_str()), "front");
    double speed = 0.0;
    double residual = 0.0;
    solver_check(gfkpp_front_speed(frames.get(), 0.5, 0.5, &speed, &residual), "front speed");
    std::cout << "c_emp,residual\n" << fmt(speed, 12) << ',' << fmt(residual, 12) << '\n';
    return 0;
}

struct ConsistencyOptions {
    std::optional<int> grid_n;
    std::optional<double> t_end;
    std::optional<double> save_every;
    std::optional<double> r1;
    std::optional<double> r2;
    std::optional<double> p_init;
    std::string profile;
    bool equal_coeffs = false;
};

int cmd_consistency(const GlobalOptions& g, const ConsistencyOptions& o) {
    Context ctx = make_context(g);
    const double r1 = pick(o.r1, ctx, "consistency.r1", 1.0);
    const double r2 = pick(o.r2, ctx, "consistency.r2", 0.0);
    const double d1 = ctx.number_or("d1", 1.0);
    const double m1 = ctx.number_or("m1", 0.0);
    const double d2 = o.equal_coeffs ? d1 : ctx.number_or("d2", 1.0);
    const double m2 = o.equal_coeffs ? m1 : ctx.number_or("m2", 0.0);
    const double t_end = pick(o.t_end, ctx, "consistency.t_end", 10.0);
    const double save_every = pick(o.save_every, ctx, "consistency.save_every", 0.5);
    const int n = pick(o.grid_n, ctx, "consistency.grid_n", 1024);
    const std::string profile = !o.profile.empty() ? o.profile : ctx.text("consistency.profile").value_or("uniform");
    const double p_init = pick(o.p_init, ctx, "consistency.p_init", 0.3);
    const gfkpp_grid grid{-20.0, 20.0, n};

    // Species 1 carries (d1, m1, r1); the frequency p = n1 / (n1 + n2) obeys
    // the model with f = (r1 - r2) p (1 - p) while n1 + n2 stays uniform.
    gfkpp_model* raw_model = nullptr;
    parse_check(gfkpp_model_quadratic(r1 - r2, d1, d2, m1, m2, &raw_model), "reduced model");
    const ModelPtr reduced_model(raw_model, gfkpp_model_free);

    std::vector<double> p(static_cast<size_t>(std::max(n, 0)), p_init);
    if (profile == "step") parse_check(gfkpp_smoothed_step(grid, 0.0, p.data()), "grid");
    else if (profile != "uniform") throw Failure{kExitParse, "--profile must be uniform or step"};
    std::vector<double> n1(p);
    std::vector<double> n2(p.size());
    for (size_t i = 0; i < p.size(); ++i) n2[i] = 1.0 - p[i];

    gfkpp_frames* raw = nullptr;
    solver_check(gfkpp_simulate_two_species({d1, m1, r1}, {d2, m2, r2}, grid, n1.data(), n2.data(), t_end,
                                            save_every, &raw),
                 "two-species run");
    const FramesPtr full(raw, gfkpp_frames_free);
    solver_check(gfkpp_simulate(reduced_model.get(), grid, p.data(), t_end, save_every, &raw), "reduced run");
    const FramesPtr reduced(raw, gfkpp_frames_free);
    double deviation = 0.0;
    solver_check(gfkpp_consistency_deviation(full.get(), reduced.get(), &deviation), "deviation");

    Sink sink(g.out);
    auto& os = sink.os();
    os << "t,deviation\n";
    const size_t frames = gfkpp_frames_count(full.get());
    for (size_t k = 0; k < frames; ++k) {
        double t = 0.0;
        const double* a = nullptr;
        const double* b = nullptr;
        const double* q = nullptr;
        size_t len = 0;
        solver_check(gfkpp_frames_time(full.get(), k, &t), "frames");
        solver_check(gfkpp_frames_values(full.get(), k, 0, &a, &len), "frames");
        solver_check(gfkpp_frames_values(full.get(), k, 1, &b, &len), "frames");
        solver_check(gfkpp_frames_values(reduced.get(), k, 0, &q, &len), "frames");
        double worst = 0.0;
        for (size_t i = 0; i < len; ++i) worst = std::max(worst, std::abs(a[i] / (a[i] + b[i]) - q[i]));
        os << fmt(t, 12) << ',' << fmt(worst, 12) << '\n';
    }
    if (sink.to_file()) std::cout << "deviation\n" << fmt(deviation, 12) << '\n';
    else os << "# max_deviation=" << fmt(deviation, 12) << '\n';
    return 0;
}

struct TrajectoryOptions {
    std::optional<double> c;
    double from = 1.0;
    double to = 0.0;
    std::string branch = "wu";
    std::optional<double> section;
};

int cmd_trajectory(const GlobalOptions& g, const TrajectoryOptions& o) {
    Context ctx = make_context(g);
    const ModelPtr m = ctx.model();
    const auto c = o.c ? o.c : ctx.number("trajectory.c");
    if (!c) throw Failure{kExitParse, "trajectory needs --c"};
    gfkpp_branch branch = GFKPP_BRANCH_UNSTABLE;
    if (o.branch == "ws") branch = GFKPP_BRANCH_STABLE;
    else if (o.branch == "wss") branch = GFKPP_BRANCH_FAST_STABLE;
    else if (o.branch != "wu") throw Failure{kExitParse, "--branch must be wu, ws or wss"};

    gfkpp_outcome outcome{};
    gfkpp_trajectory* raw = nullptr;
    solver_check(gfkpp_shoot(m.get(), *c, o.from, branch, o.to, o.section ? &*o.section : nullptr, &outcome, &raw),
                 "shoot");
    const TrajectoryPtr t(raw, gfkpp_trajectory_free);
    const std::string path = g.out.empty() ? "-" : g.out;
    solver_check(gfkpp_trajectory_write_csv(t.get(), path.c_str()), "trajectory");
    (path == "-" ? std::cerr : std::cout) << "outcome," << gfkpp_outcome_name(outcome) << '\n';
    return 0;
}

void add_model_flag(CLI::App& app, GlobalOptions& g, const std::string& flag, const std::string& key,
                    const std::string& help) {
    app.add_option_function<std::string>(
           flag, [&g, key](const std::string& v) { g.overrides[key] = v; }, help)
        ->type_name("NUM");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Travelling-wave speeds of the generalized FKPP equation"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    add_model_flag(app, g, "--k", "reaction.k", "reaction amplitude");
    add_model_flag(app, g, "--p0", "reaction.p0", "interior root of the cubic reaction");
    add_model_flag(app, g, "--d1", "d1", "diffusivity at p = 0");
    add_model_flag(app, g, "--d2", "d2", "diffusivity at p = 1");
    add_model_flag(app, g, "--m1", "m1", "advection at p = 0");
    add_model_flag(app, g, "--m2", "m2", "advection at p = 1");
    app.add_option_function<std::string>(
           "--coeffs", [&g](const std::string& v) { g.overrides["reaction.coeffs"] = v; },
           "polynomial reaction coefficients, ascending, comma separated")
        ->type_name("LIST");
    app.add_flag("--cubic", g.cubic, "use the cubic reaction k p (1 - p)(p - p0)");
    app.add_option("--config", g.config_path, "key-value config file");
    app.add_option("--out", g.out, "output path (default: standard output)");
    app.add_option("--jobs", g.jobs, "worker threads for sweeps (0: all cores)");

    bool type_b = false;
    bool with_front = false;
    auto* speed = app.add_subcommand("speed", "existence case and TypeA speed set");
    speed->add_flag("--type-b", type_b, "report the TypeB speed set instead");
    speed->add_flag("--with-front", with_front, "append the pulled/pushed column");
    auto* existence = app.add_subcommand("existence", "existence case tag");
    auto* cubic = app.add_subcommand("cubic", "closed-form speed and steepness of the bistable cubic");

    std::string d2_range;
    std::string m2_range;
    auto* sweep = app.add_subcommand("sweep-m2", "minimal speed over (d2, M2 - M1)");
    sweep->add_option("--d2-range", d2_range, "d2 values: list or a:b:step");
    sweep->add_option("--m2-range", m2_range, "M2 - M1 values: list or a:b:step");
    auto* transition = app.add_subcommand("transition", "pulled-to-pushed threshold of M2 - M1 per d2");
    transition->add_option("--d2-range", d2_range, "d2 values: list or a:b:step");
    auto* slope = app.add_subcommand("slope", "asymptotic slope K = c*(50) / 50 per d2");
    slope->add_option("--d2-range", d2_range, "d2 values: list or a:b:step");

    PdeOptions pde_opts;
    auto* pde = app.add_subcommand("pde", "simulate from a smoothed step and fit the front speed");
    pde->add_option("--grid-n", pde_opts.grid_n, "grid cells");
    pde->add_option("--t-end", pde_opts.t_end, "final time");
    pde->add_option("--save-every", pde_opts.save_every, "output interval");
    pde->add_option("--x-min", pde_opts.x_min, "left end of the domain");
    pde->add_option("--x-max", pde_opts.x_max, "right end of the domain");
    pde->add_option("--front-out", pde_opts.front_out, "front trace CSV");

    ConsistencyOptions cons_opts;
    auto* consistency = app.add_subcommand("consistency", "two-species run against the reduced frequency model");
    consistency->add_option("--grid-n", cons_opts.grid_n, "grid cells");
    consistency->add_option("--t-end", cons_opts.t_end, "final time");
    consistency->add_option("--save-every", cons_opts.save_every, "output interval");
    consistency->add_option("--r1", cons_opts.r1, "growth rate of species 1");
    consistency->add_option("--r2", cons_opts.r2, "growth rate of species 2");
    consistency->add_option("--p-init", cons_opts.p_init, "uniform initial frequency");
    consistency->add_option("--profile", cons_opts.profile, "initial frequency: uniform or step");
    consistency->add_flag("--equal-coeffs", cons_opts.equal_coeffs, "use d2 = d1 and m2 = m1");

    TrajectoryOptions traj_opts;
    auto* trajectory = app.add_subcommand("trajectory", "phase-plane manifold CSV");
    trajectory->add_option("--c", traj_opts.c, "wave speed");
    trajectory->add_option("--from", traj_opts.from, "equilibrium the manifold belongs to");
    trajectory->add_option("--to", traj_opts.to, "target p");
    trajectory->add_option("--branch", traj_opts.branch, "wu, ws or wss");
    trajectory->add_option("--section", traj_opts.section, "record Q at this p");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (speed->parsed()) return cmd_speed(g, type_b, with_front);
        if (existence->parsed()) return cmd_existence(g);
        if (cubic->parsed()) return cmd_cubic(g);
        if (sweep->parsed()) return cmd_sweep_m2(g, d2_range, m2_range);
        if (transition->parsed()) return cmd_transition(g, d2_range);
        if (slope->parsed()) return cmd_slope(g, d2_range);
        if (pde->parsed()) return cmd_pde(g, pde_opts);
        if (consistency->parsed()) return cmd_consistency(g, cons_opts);
        if (trajectory->parsed()) return cmd_trajectory(g, traj_opts);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.exit_code;
    }
    return kExitParse;
}
