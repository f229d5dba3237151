#include "gfkpp/pdesim.hpp"

#include "gfkpp/error.hpp"
#include "gfkpp/model_io.hpp"
#include "gfkpp/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

namespace gfkpp {

void Grid1D::validate() const {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min))
        fail(ErrorCode::invalid_argument, "grid needs finite bounds with x_max > x_min");
    if (n_cells < kMinCells) fail(ErrorCode::invalid_argument, "grid needs at least 64 cells");
}

std::vector<double> smoothed_step(const Grid1D& g, double x0, double width) {
    g.validate();
    const double w = width > 0.0 ? width : 2.0 * g.dx();
    std::vector<double> p(g.n_cells);
    for (int i = 0; i < g.n_cells; ++i) {
        const double z = (g.x(i) - x0) / w;
        p[i] = z > 700.0 ? 0.0 : 1.0 / (1.0 + std::exp(z));
    }
    return p;
}

double stable_time_step(const Grid1D& g, double max_d, double max_abs_m) {
    const double dx = g.dx();
    return 0.4 * std::min(dx * dx / (2.0 * max_d), dx / std::max(max_abs_m, 1e-12));
}

namespace {

struct Stepper {
    double t_end;
    double save_every;
    double dt;
};

// Advances `state` with Heun's method, calling save(t) at every output time.
template <class State, class Rhs, class Save>
void integrate(State& state, const Stepper& s, Rhs&& rhs, Save&& save) {
    if (!(s.t_end > 0.0) || !std::isfinite(s.t_end)) fail(ErrorCode::invalid_argument, "t_end must be positive");
    if (!(s.save_every > 0.0)) fail(ErrorCode::invalid_argument, "save_every must be positive");
    State k1 = state;
    State k2 = state;
    State mid = state;
    save(0.0);
    double t = 0.0;
    long saved = 0;
    while (t < s.t_end) {
        const double next_save = std::min(s.t_end, (saved + 1) * s.save_every);
        const long n_steps = std::max(1L, static_cast<long>(std::ceil((next_save - t) / s.dt - 1e-9)));
        const double h = (next_save - t) / n_steps;
        for (long step = 0; step < n_steps; ++step) {
            rhs(state, k1);
            for (std::size_t i = 0; i < state.size(); ++i) mid[i] = state[i] + h * k1[i];
            rhs(mid, k2);
            for (std::size_t i = 0; i < state.size(); ++i) state[i] += 0.5 * h * (k1[i] + k2[i]);
        }
        t = next_save;
        ++saved;
        save(t);
    }
}

// Second difference and upwinded first difference with zero-gradient ghosts.
struct Stencil {
    double dxx;
    double dx_back;
    double dx_fwd;
};

inline Stencil stencil(const double* u, int i, int n, double inv_dx) {
    const double left = i > 0 ? u[i - 1] : u[i];
    const double right = i + 1 < n ? u[i + 1] : u[i];
    return {(right - 2.0 * u[i] + left) * inv_dx * inv_dx, (u[i] - left) * inv_dx, (right - u[i]) * inv_dx};
}

[[noreturn]] void unstable(double t, int i, double x, double v, const char* field) {
    std::ostringstream os;
    os.precision(12);
    os << "frame t = " << t << " leaves the invariant box: " << field << "(" << x << ") = " << v << " (cell " << i
       << ")";
    fail(ErrorCode::instability, os.str());
}

}  // namespace

std::vector<FieldFrame> simulate_gfkpp(const GfkppModel& m, const Grid1D& g, std::span<const double> ic,
                                       double t_end, double save_every) {
    m.validate();
    g.validate();
    if (ic.size() != static_cast<std::size_t>(g.n_cells))
        fail(ErrorCode::invalid_argument, "initial profile length differs from the grid");
    for (double v : ic)
        if (!(v >= 0.0 && v <= 1.0)) fail(ErrorCode::invalid_argument, "initial profile must lie in [0, 1]");

    const int n = g.n_cells;
    const double inv_dx = 1.0 / g.dx();
    const Stepper stepper{t_end, save_every,
                          stable_time_step(g, std::max(m.d1, m.d2), std::max(std::abs(m.m1), std::abs(m.m2)))};
    auto rhs = [&](const std::vector<double>& u, std::vector<double>& out) {
        for (int i = 0; i < n; ++i) {
            const double p = u[i];
            const Stencil s = stencil(u.data(), i, n, inv_dx);
            const double adv = m.advection(p);
            out[i] = m.diffusion(p) * s.dxx - adv * (adv > 0.0 ? s.dx_back : s.dx_fwd) + m.reaction(p);
        }
    };

    std::vector<double> state(ic.begin(), ic.end());
    std::vector<FieldFrame> frames;
    integrate(state, stepper, rhs, [&](double t) {
        for (int i = 0; i < n; ++i) {
            const double v = state[i];
            if (!(v >= -kInstabilityTolerance && v <= 1.0 + kInstabilityTolerance)) unstable(t, i, g.x(i), v, "p");
        }
        frames.push_back({t, state});
    });
    return frames;
}

std::vector<SpeciesFrame> simulate_two_species(const SpeciesParams& s1, const SpeciesParams& s2, const Grid1D& g,
                                               std::span<const double> n1, std::span<const double> n2,
                                               double t_end, double save_every) {
    g.validate();
    if (!(s1.d > 0.0 && s2.d > 0.0)) fail(ErrorCode::invalid_argument, "diffusivities must be positive");
    const int n = g.n_cells;
    if (n1.size() != static_cast<std::size_t>(n) || n2.size() != static_cast<std::size_t>(n))
        fail(ErrorCode::invalid_argument, "initial profile length differs from the grid");
    for (std::size_t i = 0; i < n1.size(); ++i)
        if (!(n1[i] >= 0.0 && n2[i] >= 0.0)) fail(ErrorCode::invalid_argument, "initial densities must be nonnegative");

    const double inv_dx = 1.0 / g.dx();
    const Stepper stepper{t_end, save_every,
                          stable_time_step(g, std::max(s1.d, s2.d), std::max(std::abs(s1.m), std::abs(s2.m)))};
    // State layout: n1 in [0, n), n2 in [n, 2n).
    auto rhs = [&](const std::vector<double>& u, std::vector<double>& out) {
        for (int j = 0; j < 2; ++j) {
            const SpeciesParams& sp = j == 0 ? s1 : s2;
            const double* field = u.data() + j * n;
            for (int i = 0; i < n; ++i) {
                const Stencil s = stencil(field, i, n, inv_dx);
                out[j * n + i] = sp.d * s.dxx - sp.m * (sp.m > 0.0 ? s.dx_back : s.dx_fwd) + sp.r * field[i];
            }
        }
    };

    std::vector<double> state(n1.begin(), n1.end());
    state.insert(state.end(), n2.begin(), n2.end());
    std::vector<SpeciesFrame> frames;
    integrate(state, stepper, rhs, [&](double t) {
        for (int i = 0; i < 2 * n; ++i)
            if (!(state[i] >= -kInstabilityTolerance)) unstable(t, i % n, g.x(i % n), state[i], i < n ? "n1" : "n2");
        frames.push_back({t, {state.begin(), state.begin() + n}, {state.begin() + n, state.end()}});
    });
    return frames;
}

double consistency_deviation(std::span<const SpeciesFrame> full, std::span<const FieldFrame> reduced) {
    if (full.size() != reduced.size()) fail(ErrorCode::alignment, "runs saved a different number of frames");
    double worst = 0.0;
    for (std::size_t k = 0; k < full.size(); ++k) {
        const auto& a = full[k];
        const auto& b = reduced[k];
        if (std::abs(a.t - b.t) > 1e-9 * std::max(1.0, std::abs(a.t))) {
            std::ostringstream os;
            os << "frame " << k << " saved at t = " << a.t << " and t = " << b.t;
            fail(ErrorCode::alignment, os.str());
        }
        if (a.n1.size() != b.p.size()) fail(ErrorCode::alignment, "runs use different grids");
        for (std::size_t i = 0; i < b.p.size(); ++i) {
            const double total = a.n1[i] + a.n2[i];
            if (!(total > 0.0)) fail(ErrorCode::invalid_argument, "total density vanishes; frequency undefined");
            worst = std::max(worst, std::abs(a.n1[i] / total - b.p[i]));
        }
    }
    return worst;
}

FrontTrace measure_front_speed(std::span<const FieldFrame> frames, const Grid1D& g, double level, double window) {
    if (!(window > 0.0 && window <= 1.0)) fail(ErrorCode::invalid_argument, "window must lie in (0, 1]");
    FrontTrace trace;
    for (const auto& f : frames) {
        std::optional<double> x_front;
        int crossings = 0;
        for (std::size_t i = 0; i + 1 < f.p.size(); ++i) {
            const double a = f.p[i] - level;
            const double b = f.p[i + 1] - level;
            if ((a > 0.0) == (b > 0.0)) continue;
            ++crossings;
            const double w = a / (a - b);
            x_front = g.x(static_cast<int>(i)) + w * g.dx();
        }
        if (crossings != 1) {
            std::ostringstream os;
            os << "frame t = " << f.t << " crosses p = " << level << " " << crossings << " times";
            fail(ErrorCode::non_front, os.str());
        }
        trace.points.push_back({f.t, *x_front});
    }
    const std::size_t n = trace.points.size();
    const auto first = static_cast<std::size_t>(std::floor((1.0 - window) * static_cast<double>(n)));
    if (n - first < 10) fail(ErrorCode::invalid_argument, "front fit needs at least 10 frames in the window");
    std::vector<double> ts;
    std::vector<double> xs;
    for (std::size_t k = first; k < n; ++k) {
        ts.push_back(trace.points[k].first);
        xs.push_back(trace.points[k].second);
    }
    const LinearFit fit = fit_line(ts, xs);
    trace.speed = fit.slope;
    double ss = 0.0;
    for (std::size_t k = 0; k < ts.size(); ++k) {
        const double r = xs[k] - (fit.intercept + fit.slope * ts[k]);
        ss += r * r;
    }
    trace.residual = std::sqrt(ss / static_cast<double>(ts.size()));
    return trace;
}

namespace {

void write_comment(std::ostream& os, const std::string& comment) {
    if (comment.empty()) return;
    std::istringstream lines(comment);
    for (std::string line; std::getline(lines, line);) os << "# " << line << '\n';
}

}  // namespace

void write_frames_csv(std::ostream& os, const Grid1D& g, std::span<const FieldFrame> frames,
                      const std::string& comment) {
    write_comment(os, comment);
    os << "t,x,p\n";
    for (const auto& f : frames) {
        const std::string t = format_sig(f.t, 12);
        for (std::size_t i = 0; i < f.p.size(); ++i)
            os << t << ',' << format_sig(g.x(static_cast<int>(i)), 12) << ',' << format_sig(f.p[i], 12) << '\n';
    }
}

void write_species_csv(std::ostream& os, const Grid1D& g, std::span<const SpeciesFrame> frames,
                       const std::string& comment) {
    write_comment(os, comment);
    os << "t,x,n1,n2\n";
    for (const auto& f : frames) {
        const std::string t = format_sig(f.t, 12);
        for (std::size_t i = 0; i < f.n1.size(); ++i)
            os << t << ',' << format_sig(g.x(static_cast<int>(i)), 12) << ',' << format_sig(f.n1[i], 12) << ','
               << format_sig(f.n2[i], 12) << '\n';
    }
}

void write_front_csv(std::ostream& os, const FrontTrace& trace, const std::string& comment) {
    write_comment(os, comment);
    os << "t,x_front\n";
    for (const auto& [t, x] : trace.points) os << format_sig(t, 12) << ',' << format_sig(x, 12) << '\n';
}

}  // namespace gfkpp
