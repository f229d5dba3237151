#include "gfkpp/gfkpp.h"

#include "gfkpp/error.hpp"
#include "gfkpp/model.hpp"
#include "gfkpp/model_io.hpp"
#include "gfkpp/pdesim.hpp"
#include "gfkpp/shooting.hpp"
#include "gfkpp/speed.hpp"
#include "gfkpp/sweep.hpp"

#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <new>
#include <optional>
#include <string>
#include <variant>
#include <vector>

struct gfkpp_model {
    gfkpp::GfkppModel m;
};

struct gfkpp_config {
    gfkpp::KeyValueConfig cfg;
    std::map<std::string, std::string> views;
};

struct gfkpp_trajectory {
    gfkpp::ShootResult r;
};

struct gfkpp_frames {
    gfkpp::Grid1D grid;
    std::variant<std::vector<gfkpp::FieldFrame>, std::vector<gfkpp::SpeciesFrame>> frames;
};

namespace {

thread_local std::string g_last_error;

gfkpp_status set_error(gfkpp_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

template <class Fn>
gfkpp_status guard(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return GFKPP_OK;
    } catch (const gfkpp::Error& e) {
        return set_error(static_cast<gfkpp_status>(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(GFKPP_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(GFKPP_E_INTERNAL, e.what());
    } catch (...) {
        return set_error(GFKPP_E_INTERNAL, "unknown failure");
    }
}

void need(const void* p, const char* what) {
    if (p == nullptr) gfkpp::fail(gfkpp::ErrorCode::invalid_argument, std::string(what) + " is null");
}

gfkpp_speed_set to_c(const gfkpp::SpeedSet& s) {
    gfkpp_speed_set out{};
    out.regime = static_cast<gfkpp_regime>(s.regime);
    out.c_star = s.c_star;
    out.has_secondary = s.c_secondary.has_value() ? 1 : 0;
    out.c_secondary = s.c_secondary.value_or(0.0);
    out.type_b = s.orbit_type == gfkpp::OrbitType::type_b ? 1 : 0;
    out.front = static_cast<gfkpp_front>(s.front);
    out.boundary_tie = s.boundary_tie ? 1 : 0;
    return out;
}

gfkpp::Grid1D to_grid(gfkpp_grid g) {
    gfkpp::Grid1D out{g.x_min, g.x_max, g.n_cells};
    out.validate();
    return out;
}

gfkpp_status copy_out(const std::string& s, char* buf, size_t cap, size_t* needed) {
    if (needed != nullptr) *needed = s.size();
    if (buf == nullptr || cap <= s.size())
        return set_error(GFKPP_E_BUFFER_TOO_SMALL, "buffer needs " + std::to_string(s.size() + 1) + " bytes");
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return GFKPP_OK;
}

template <class Write>
void with_stream(const char* path, Write&& write) {
    need(path, "path");
    if (std::strcmp(path, "-") == 0) {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream os(path);
    if (!os) gfkpp::fail(gfkpp::ErrorCode::io, std::string("cannot open ") + path + " for writing");
    write(os);
    if (!os) gfkpp::fail(gfkpp::ErrorCode::io, std::string("write to ") + path + " failed");
}

const std::vector<gfkpp::FieldFrame>& field_frames(const gfkpp_frames* f) {
    need(f, "frames");
    const auto* v = std::get_if<std::vector<gfkpp::FieldFrame>>(&f->frames);
    if (v == nullptr) gfkpp::fail(gfkpp::ErrorCode::invalid_argument, "frames hold a two-species run");
    return *v;
}

const std::vector<gfkpp::SpeciesFrame>& species_frames(const gfkpp_frames* f) {
    need(f, "frames");
    const auto* v = std::get_if<std::vector<gfkpp::SpeciesFrame>>(&f->frames);
    if (v == nullptr) gfkpp::fail(gfkpp::ErrorCode::invalid_argument, "frames hold a single-field run");
    return *v;
}

gfkpp_status status_of(const std::exception_ptr& e) {
    try {
        std::rethrow_exception(e);
    } catch (const gfkpp::Error& err) {
        return static_cast<gfkpp_status>(err.code());
    } catch (...) {
        return GFKPP_E_INTERNAL;
    }
}

// Runs fn(i) for every i, storing per-point statuses instead of failing.
template <class Fn>
void per_point(size_t n, unsigned jobs, double* out, gfkpp_status* status, Fn&& fn) {
    const auto results = gfkpp::parallel_map(n, jobs, [&](std::size_t i) {
        std::pair<double, gfkpp_status> r{0.0, GFKPP_OK};
        try {
            r.first = fn(i);
        } catch (...) {
            r.second = status_of(std::current_exception());
        }
        return r;
    });
    for (size_t i = 0; i < n; ++i) {
        out[i] = results[i].first;
        if (status != nullptr) status[i] = results[i].second;
    }
}

}  // namespace

extern "C" {

const char* gfkpp_last_error(void) { return g_last_error.c_str(); }

const char* gfkpp_status_name(gfkpp_status s) {
    switch (s) {
        case GFKPP_OK: return "ok";
        case GFKPP_E_BUFFER_TOO_SMALL: return "buffer_too_small";
        case GFKPP_E_INTERNAL: return "internal";
        default:
            if (s >= GFKPP_E_INVALID_ARGUMENT && s <= GFKPP_E_IO) return gfkpp::to_string(static_cast<gfkpp::ErrorCode>(s));
            return "unknown";
    }
}

const char* gfkpp_case_name(gfkpp_case c) {
    if (c < GFKPP_CASE_A1 || c > GFKPP_CASE_D) return "unknown";
    return gfkpp::to_string(static_cast<gfkpp::ExistenceCase>(c)).data();
}

const char* gfkpp_regime_name(gfkpp_regime r) {
    if (r < GFKPP_REGIME_HALF_LINE_CLOSED_RIGHT || r > GFKPP_REGIME_EMPTY) return "unknown";
    return gfkpp::to_string(static_cast<gfkpp::Regime>(r)).data();
}

const char* gfkpp_front_name(gfkpp_front f) {
    if (f < GFKPP_FRONT_NOT_APPLICABLE || f > GFKPP_FRONT_PUSHED) return "unknown";
    return gfkpp::to_string(static_cast<gfkpp::FrontKind>(f)).data();
}

const char* gfkpp_outcome_name(gfkpp_outcome o) {
    if (o < GFKPP_OUTCOME_CONNECT || o > GFKPP_OUTCOME_UNDERSHOOT) return "unknown";
    return gfkpp::to_string(static_cast<gfkpp::Outcome>(o)).data();
}

gfkpp_status gfkpp_config_parse(const char* text, gfkpp_config** out) {
    return guard([&] {
        need(text, "text");
        need(out, "out");
        *out = new gfkpp_config{gfkpp::KeyValueConfig::parse(text), {}};
    });
}

gfkpp_status gfkpp_config_load(const char* path, gfkpp_config** out) {
    return guard([&] {
        need(path, "path");
        need(out, "out");
        *out = new gfkpp_config{gfkpp::KeyValueConfig::load(path), {}};
    });
}

gfkpp_status gfkpp_config_set(gfkpp_config* cfg, const char* key, const char* value) {
    return guard([&] {
        need(cfg, "config");
        need(key, "key");
        need(value, "value");
        cfg->cfg.set(key, value);
        cfg->views.erase(key);
    });
}

gfkpp_status gfkpp_config_get_number(const gfkpp_config* cfg, const char* key, double* out, int* found) {
    return guard([&] {
        need(cfg, "config");
        need(key, "key");
        need(out, "out");
        const auto v = cfg->cfg.get_number(key);
        if (found != nullptr) *found = v ? 1 : 0;
        if (v) *out = *v;
    });
}

gfkpp_status gfkpp_config_get_string(const gfkpp_config* cfg, const char* key, const char** out) {
    return guard([&] {
        need(cfg, "config");
        need(key, "key");
        need(out, "out");
        const auto v = cfg->cfg.get(key);
        if (!v) {
            *out = nullptr;
            return;
        }
        auto& views = const_cast<gfkpp_config*>(cfg)->views;
        *out = (views[key] = *v).c_str();
    });
}

void gfkpp_config_free(gfkpp_config* cfg) { delete cfg; }

gfkpp_status gfkpp_format(double v, int digits, char* buf, size_t cap) {
    if (digits < 1 || digits > 17) return set_error(GFKPP_E_INVALID_ARGUMENT, "digits must lie in [1, 17]");
    return copy_out(gfkpp::format_sig(v, digits), buf, cap, nullptr);
}

gfkpp_status gfkpp_parse_range(const char* text, double* out, size_t cap, size_t* count) {
    std::vector<double> v;
    const gfkpp_status s = guard([&] {
        need(text, "text");
        v = gfkpp::parse_range(text);
    });
    if (s != GFKPP_OK) return s;
    if (count != nullptr) *count = v.size();
    if (out == nullptr || cap < v.size())
        return set_error(GFKPP_E_BUFFER_TOO_SMALL, "range has " + std::to_string(v.size()) + " points");
    std::copy(v.begin(), v.end(), out);
    return GFKPP_OK;
}

gfkpp_status gfkpp_model_quadratic(double k, double d1, double d2, double m1, double m2, gfkpp_model** out) {
    return guard([&] {
        need(out, "out");
        *out = new gfkpp_model{gfkpp::make_model(d1, d2, m1, m2, gfkpp::ReactionFn::quadratic(k))};
    });
}

gfkpp_status gfkpp_model_cubic(double k, double p0, double d1, double d2, double m1, double m2,
                               gfkpp_model** out) {
    return guard([&] {
        need(out, "out");
        *out = new gfkpp_model{gfkpp::make_model(d1, d2, m1, m2, gfkpp::ReactionFn::cubic(k, p0))};
    });
}

gfkpp_status gfkpp_model_polynomial(const double* coeffs, size_t n, double d1, double d2, double m1, double m2,
                                    gfkpp_model** out) {
    return guard([&] {
        need(coeffs, "coeffs");
        need(out, "out");
        std::vector<double> c(coeffs, coeffs + n);
        *out = new gfkpp_model{gfkpp::make_model(d1, d2, m1, m2, gfkpp::ReactionFn::polynomial(std::move(c)))};
    });
}

gfkpp_status gfkpp_model_from_config(const gfkpp_config* cfg, gfkpp_model** out) {
    return guard([&] {
        need(cfg, "config");
        need(out, "out");
        *out = new gfkpp_model{gfkpp::model_from_config(cfg->cfg)};
    });
}

gfkpp_status gfkpp_model_to_config(const gfkpp_model* m, char* buf, size_t cap, size_t* needed) {
    std::string text;
    const gfkpp_status s = guard([&] {
        need(m, "model");
        text = gfkpp::model_to_config(m->m);
    });
    if (s != GFKPP_OK) return s;
    return copy_out(text, buf, cap, needed);
}

gfkpp_status gfkpp_model_params(const gfkpp_model* m, double* d1, double* d2, double* m1, double* m2) {
    return guard([&] {
        need(m, "model");
        if (d1 != nullptr) *d1 = m->m.d1;
        if (d2 != nullptr) *d2 = m->m.d2;
        if (m1 != nullptr) *m1 = m->m.m1;
        if (m2 != nullptr) *m2 = m->m.m2;
    });
}

gfkpp_status gfkpp_model_roots(const gfkpp_model* m, double* out, size_t cap, size_t* count) {
    const gfkpp_status s = guard([&] { need(m, "model"); });
    if (s != GFKPP_OK) return s;
    const auto& roots = m->m.reaction.roots();
    if (count != nullptr) *count = roots.size();
    if (out == nullptr || cap < roots.size())
        return set_error(GFKPP_E_BUFFER_TOO_SMALL, "model has " + std::to_string(roots.size()) + " roots");
    std::copy(roots.begin(), roots.end(), out);
    return GFKPP_OK;
}

gfkpp_status gfkpp_model_reaction(const gfkpp_model* m, double p, double* f, double* df) {
    return guard([&] {
        need(m, "model");
        if (f != nullptr) *f = m->m.reaction(p);
        if (df != nullptr) *df = m->m.reaction.derivative(p);
    });
}

gfkpp_status gfkpp_model_sym1(const gfkpp_model* m, gfkpp_model** out) {
    return guard([&] {
        need(m, "model");
        need(out, "out");
        *out = new gfkpp_model{gfkpp::apply_sym1(m->m)};
    });
}

gfkpp_status gfkpp_model_sym2(const gfkpp_model* m, gfkpp_model** out) {
    return guard([&] {
        need(m, "model");
        need(out, "out");
        *out = new gfkpp_model{gfkpp::apply_sym2(m->m)};
    });
}

void gfkpp_model_free(gfkpp_model* m) { delete m; }

gfkpp_status gfkpp_classify(const gfkpp_model* m, gfkpp_case* out) {
    return guard([&] {
        need(m, "model");
        need(out, "out");
        *out = static_cast<gfkpp_case>(gfkpp::classify_existence(m->m));
    });
}

gfkpp_status gfkpp_speed_type_a(const gfkpp_model* m, gfkpp_speed_set* out) {
    return guard([&] {
        need(m, "model");
        need(out, "out");
        *out = to_c(gfkpp::typea_speed_set(m->m));
    });
}

gfkpp_status gfkpp_speed_type_b(const gfkpp_model* m, gfkpp_speed_set* out) {
    return guard([&] {
        need(m, "model");
        need(out, "out");
        *out = to_c(gfkpp::type_b_speed_set(m->m));
    });
}

gfkpp_status gfkpp_minimal_speed(const gfkpp_model* m, gfkpp_speed_set* out) {
    return guard([&] {
        need(m, "model");
        need(out, "out");
        *out = to_c(gfkpp::minimal_speed_numeric(m->m));
    });
}

gfkpp_status gfkpp_closed_form_quadratic(const gfkpp_model* m, gfkpp_speed_set* out) {
    return guard([&] {
        need(m, "model");
        need(out, "out");
        *out = to_c(gfkpp::closed_form_quadratic(m->m));
    });
}

gfkpp_status gfkpp_closed_form_cubic(const gfkpp_model* m, gfkpp_speed_set* out, double* zeta) {
    return guard([&] {
        need(m, "model");
        need(out, "out");
        const auto r = gfkpp::closed_form_cubic(m->m);
        *out = to_c(r.speeds);
        if (zeta != nullptr) *zeta = r.zeta;
    });
}

gfkpp_status gfkpp_unique_speed_bistable(const gfkpp_model* m, double p3, double p2, double p1,
                                         gfkpp_speed_set* out) {
    return guard([&] {
        need(m, "model");
        need(out, "out");
        *out = to_c(gfkpp::unique_speed_bistable(m->m, p3, p2, p1));
    });
}

gfkpp_status gfkpp_sweep_m2(double k, double d1, double m1, const double* d2s, size_t n_d2, const double* ms,
                            size_t n_m, unsigned jobs, double* c_out, gfkpp_front* front_out,
                            gfkpp_status* status_out) {
    return guard([&] {
        need(d2s, "d2s");
        need(ms, "ms");
        need(c_out, "c_out");
        const gfkpp::ModelTemplate base{k, d1, m1};
        std::vector<gfkpp::FrontKind> fronts(n_d2 * n_m, gfkpp::FrontKind::not_applicable);
        per_point(n_d2 * n_m, jobs, c_out, status_out, [&](std::size_t i) {
            const auto s = gfkpp::minimal_speed_numeric(base.at(d2s[i / n_m], ms[i % n_m]));
            fronts[i] = s.front;
            return s.c_star;
        });
        if (front_out != nullptr)
            for (size_t i = 0; i < fronts.size(); ++i) front_out[i] = static_cast<gfkpp_front>(fronts[i]);
    });
}

gfkpp_status gfkpp_transition_scan(double k, double d1, double m1, const double* d2s, size_t n, unsigned jobs,
                                   double* m_trans_out, gfkpp_status* status_out) {
    return guard([&] {
        need(d2s, "d2s");
        need(m_trans_out, "m_trans_out");
        const gfkpp::ModelTemplate base{k, d1, m1};
        per_point(n, jobs, m_trans_out, status_out,
                  [&](std::size_t i) { return gfkpp::transition_scan(d2s[i], base).m_trans; });
    });
}

gfkpp_status gfkpp_asymptotic_slope(double k, double d1, double m1, const double* d2s, size_t n, unsigned jobs,
                                    double* k_out, gfkpp_status* status_out) {
    return guard([&] {
        need(d2s, "d2s");
        need(k_out, "k_out");
        const gfkpp::ModelTemplate base{k, d1, m1};
        per_point(n, jobs, k_out, status_out, [&](std::size_t i) { return gfkpp::asymptotic_slope(d2s[i], base); });
    });
}

gfkpp_status gfkpp_fit_line(const double* x, const double* y, size_t n, double* slope, double* intercept,
                            double* r_squared) {
    return guard([&] {
        need(x, "x");
        need(y, "y");
        const auto f = gfkpp::fit_line({x, n}, {y, n});
        if (slope != nullptr) *slope = f.slope;
        if (intercept != nullptr) *intercept = f.intercept;
        if (r_squared != nullptr) *r_squared = f.r_squared;
    });
}

gfkpp_status gfkpp_shoot(const gfkpp_model* m, double c, double p_origin, gfkpp_branch branch, double p_target,
                         const double* section, gfkpp_outcome* outcome, gfkpp_trajectory** out) {
    return guard([&] {
        need(m, "model");
        if (branch < GFKPP_BRANCH_UNSTABLE || branch > GFKPP_BRANCH_FAST_STABLE)
            gfkpp::fail(gfkpp::ErrorCode::invalid_argument, "unknown manifold branch");
        const auto spec = gfkpp::make_manifold(m->m, c, p_origin, static_cast<gfkpp::ManifoldBranch>(branch));
        std::optional<double> sec;
        if (section != nullptr) sec = *section;
        auto r = gfkpp::shoot(m->m, c, spec, p_target, sec);
        if (outcome != nullptr) *outcome = static_cast<gfkpp_outcome>(r.outcome);
        if (out != nullptr) *out = new gfkpp_trajectory{std::move(r)};
    });
}

size_t gfkpp_trajectory_size(const gfkpp_trajectory* t) { return t == nullptr ? 0 : t->r.trajectory.size(); }

gfkpp_status gfkpp_trajectory_point(const gfkpp_trajectory* t, size_t i, double* p, double* q) {
    return guard([&] {
        need(t, "trajectory");
        if (i >= t->r.trajectory.size()) gfkpp::fail(gfkpp::ErrorCode::invalid_argument, "point index out of range");
        if (p != nullptr) *p = t->r.trajectory[i].p;
        if (q != nullptr) *q = t->r.trajectory[i].q;
    });
}

gfkpp_status gfkpp_trajectory_section_q(const gfkpp_trajectory* t, double* q, int* found) {
    return guard([&] {
        need(t, "trajectory");
        need(q, "q");
        if (found != nullptr) *found = t->r.q_at_section ? 1 : 0;
        if (t->r.q_at_section) *q = *t->r.q_at_section;
    });
}

gfkpp_status gfkpp_trajectory_write_csv(const gfkpp_trajectory* t, const char* path) {
    return guard([&] {
        need(t, "trajectory");
        with_stream(path, [&](std::ostream& os) { gfkpp::write_trajectory_csv(os, t->r.trajectory); });
    });
}

void gfkpp_trajectory_free(gfkpp_trajectory* t) { delete t; }

gfkpp_status gfkpp_section_gap(const gfkpp_model* m, double c, double p3, double p2, double p1, double* w) {
    return guard([&] {
        need(m, "model");
        need(w, "w");
        *w = gfkpp::section_gap(m->m, c, p3, p2, p1);
    });
}

gfkpp_status gfkpp_separatrix_admissible(const gfkpp_model* m, double c, int* admissible) {
    return guard([&] {
        need(m, "model");
        need(admissible, "admissible");
        *admissible = gfkpp::separatrix_compare(m->m, c).admissible ? 1 : 0;
    });
}

gfkpp_status gfkpp_simulate_step(const gfkpp_model* m, gfkpp_grid grid, double x0, double t_end,
                                 double save_every, gfkpp_frames** out) {
    return guard([&] {
        need(m, "model");
        need(out, "out");
        const auto g = to_grid(grid);
        const auto ic = gfkpp::smoothed_step(g, x0);
        *out = new gfkpp_frames{g, gfkpp::simulate_gfkpp(m->m, g, ic, t_end, save_every)};
    });
}

gfkpp_status gfkpp_simulate(const gfkpp_model* m, gfkpp_grid grid, const double* ic, double t_end,
                            double save_every, gfkpp_frames** out) {
    return guard([&] {
        need(m, "model");
        need(ic, "ic");
        need(out, "out");
        const auto g = to_grid(grid);
        *out = new gfkpp_frames{
            g, gfkpp::simulate_gfkpp(m->m, g, {ic, static_cast<size_t>(g.n_cells)}, t_end, save_every)};
    });
}

gfkpp_status gfkpp_simulate_two_species(gfkpp_species s1, gfkpp_species s2, gfkpp_grid grid, const double* n1,
                                        const double* n2, double t_end, double save_every, gfkpp_frames** out) {
    return guard([&] {
        need(n1, "n1");
        need(n2, "n2");
        need(out, "out");
        const auto g = to_grid(grid);
        const auto n = static_cast<size_t>(g.n_cells);
        *out = new gfkpp_frames{g, gfkpp::simulate_two_species({s1.d, s1.m, s1.r}, {s2.d, s2.m, s2.r}, g, {n1, n},
                                                               {n2, n}, t_end, save_every)};
    });
}

gfkpp_status gfkpp_smoothed_step(gfkpp_grid grid, double x0, double* out) {
    return guard([&] {
        need(out, "out");
        const auto p = gfkpp::smoothed_step(to_grid(grid), x0);
        std::copy(p.begin(), p.end(), out);
    });
}

size_t gfkpp_frames_count(const gfkpp_frames* f) {
    if (f == nullptr) return 0;
    return std::visit([](const auto& v) { return v.size(); }, f->frames);
}

gfkpp_status gfkpp_frames_time(const gfkpp_frames* f, size_t i, double* t) {
    return guard([&] {
        need(f, "frames");
        need(t, "t");
        if (i >= gfkpp_frames_count(f)) gfkpp::fail(gfkpp::ErrorCode::invalid_argument, "frame index out of range");
        *t = std::visit([&](const auto& v) { return v[i].t; }, f->frames);
    });
}

gfkpp_status gfkpp_frames_values(const gfkpp_frames* f, size_t i, int field, const double** data, size_t* n) {
    return guard([&] {
        need(f, "frames");
        need(data, "data");
        if (i >= gfkpp_frames_count(f)) gfkpp::fail(gfkpp::ErrorCode::invalid_argument, "frame index out of range");
        const std::vector<double>* v = nullptr;
        if (const auto* ff = std::get_if<std::vector<gfkpp::FieldFrame>>(&f->frames)) {
            if (field == 0) v = &(*ff)[i].p;
        } else {
            const auto& sf = std::get<std::vector<gfkpp::SpeciesFrame>>(f->frames)[i];
            if (field == 0) v = &sf.n1;
            if (field == 1) v = &sf.n2;
        }
        if (v == nullptr) gfkpp::fail(gfkpp::ErrorCode::invalid_argument, "no such field in these frames");
        *data = v->data();
        if (n != nullptr) *n = v->size();
    });
}

gfkpp_status gfkpp_front_speed(const gfkpp_frames* f, double level, double window, double* speed,
                               double* residual) {
    return guard([&] {
        const auto& frames = field_frames(f);
        const auto tr = gfkpp::measure_front_speed(frames, f->grid, level, window);
        if (speed != nullptr) *speed = tr.speed;
        if (residual != nullptr) *residual = tr.residual;
    });
}

gfkpp_status gfkpp_consistency_deviation(const gfkpp_frames* full, const gfkpp_frames* reduced,
                                         double* deviation) {
    return guard([&] {
        need(deviation, "deviation");
        *deviation = gfkpp::consistency_deviation(species_frames(full), field_frames(reduced));
    });
}

gfkpp_status gfkpp_frames_write_csv(const gfkpp_frames* f, const char* path, const char* comment) {
    return guard([&] {
        need(f, "frames");
        const std::string c = comment == nullptr ? "" : comment;
        with_stream(path, [&](std::ostream& os) {
            if (const auto* ff = std::get_if<std::vector<gfkpp::FieldFrame>>(&f->frames))
                gfkpp::write_frames_csv(os, f->grid, *ff, c);
            else
                gfkpp::write_species_csv(os, f->grid, std::get<std::vector<gfkpp::SpeciesFrame>>(f->frames), c);
        });
    });
}

gfkpp_status gfkpp_front_write_csv(const gfkpp_frames* f, double level, double window, const char* path,
                                   const char* comment) {
    return guard([&] {
        const auto& frames = field_frames(f);
        const auto tr = gfkpp::measure_front_speed(frames, f->grid, level, window);
        with_stream(path, [&](std::ostream& os) { gfkpp::write_front_csv(os, tr, comment == nullptr ? "" : comment); });
    });
}

void gfkpp_frames_free(gfkpp_frames* f) { delete f; }

}  // extern "C"
