#include "gfkpp/shooting.hpp"

#include "gfkpp/error.hpp"
#include "gfkpp/integrator.hpp"
#include "gfkpp/model_io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

namespace gfkpp {

std::string_view to_string(ManifoldBranch b) noexcept {
    switch (b) {
        case ManifoldBranch::unstable_wu: return "unstable_wu";
        case ManifoldBranch::stable_ws: return "stable_ws";
        case ManifoldBranch::fast_stable_wss: return "fast_stable_wss";
    }
    return "?";
}

std::string_view to_string(Outcome o) noexcept {
    switch (o) {
        case Outcome::connect: return "connect";
        case Outcome::overshoot: return "overshoot";
        case Outcome::undershoot: return "undershoot";
    }
    return "?";
}

namespace {

constexpr ode::Tolerance kGraphTol{1e-10, 1e-12};
constexpr int kMaxSteps = 2'000'000;

// Above this multiple of the starting slope the graph Q(P) is treated as
// turning and P(Q) is integrated instead.
constexpr double kSlopeSwitch = 1e3;

[[noreturn]] void integration_failure(const char* what, double p, double q) {
    std::ostringstream os;
    os.precision(17);
    os << what << " at (p, q) = (" << p << ", " << q << ")";
    fail(ErrorCode::integration_failure, os.str());
}

bool fast_direction_separated(const Equilibrium& e) {
    if (e.etype != EquilibriumType::stable_node) return false;
    const double lp = e.lambda_plus.real();
    const double lm = e.lambda_minus.real();
    return lm < lp && lp < 0.0 && lp / lm < 1.0 - kFastSeparation;
}

void check_branch(const Equilibrium& e, ManifoldBranch branch) {
    switch (branch) {
        case ManifoldBranch::unstable_wu:
        case ManifoldBranch::stable_ws:
            if (e.etype != EquilibriumType::saddle) {
                std::ostringstream os;
                os << to_string(branch) << " needs a saddle, p = " << e.p_star << " is "
                   << to_string(e.etype);
                fail(ErrorCode::invalid_manifold, os.str());
            }
            break;
        case ManifoldBranch::fast_stable_wss:
            if (!fast_direction_separated(e)) {
                std::ostringstream os;
                os << "fast stable manifold needs a node with separated eigenvalues, p = " << e.p_star
                   << " is " << to_string(e.etype) << " (lambda+ = " << e.lambda_plus.real()
                   << ", lambda- = " << e.lambda_minus.real() << ")";
                fail(ErrorCode::invalid_manifold, os.str());
            }
            break;
    }
}

double branch_lambda(const Equilibrium& e, ManifoldBranch b) {
    return b == ManifoldBranch::unstable_wu ? e.lambda_plus.real() : e.lambda_minus.real();
}

// Largest eigenvalue magnitude at p if p is a root with real eigenvalues, else 0.
double arrival_slope(const GfkppModel& m, double c, double p) {
    if (std::abs(m.reaction(p)) > kRootTolerance) return 0.0;
    const Equilibrium e = linearize(m, c, p);
    if (!e.real_eigenvalues()) return 0.0;
    return std::max(std::abs(e.lambda_plus.real()), std::abs(e.lambda_minus.real()));
}

}  // namespace

ManifoldSpec make_manifold(const GfkppModel& m, double c, double p_star, ManifoldBranch branch, double offset) {
    ManifoldSpec spec{linearize(m, c, p_star), branch, offset};
    check_branch(spec.origin, branch);
    return spec;
}

PhasePoint manifold_start(const GfkppModel& m, double c, const Equilibrium& e, double lambda, double u) {
    // Q = lambda u + a u^2 solves Q Q' D = (M - c) Q - f through second order.
    const double d0 = m.diffusion(e.p_star);
    const double m0 = m.advection(e.p_star);
    const double slope_d = m.d2 - m.d1;
    const double slope_m = m.m2 - m.m1;
    const double f2 = 0.5 * m.reaction.second_derivative(e.p_star);
    const double denom = 3.0 * lambda * d0 - (m0 - c);
    const double a = denom != 0.0 ? (slope_m * lambda - f2 - slope_d * lambda * lambda) / denom : 0.0;
    return {e.p_star + u, lambda * u + a * u * u};
}

Trace trace_graph(const GfkppModel& m, double c, PhasePoint start, double p_stop,
                  std::span<const double> landmarks, bool record) {
    const double dir = p_stop >= start.p ? 1.0 : -1.0;
    const double span = std::abs(p_stop - start.p);
    const auto& f = m.reaction;

    auto dq_dp = [&](double p, double q) { return ((m.advection(p) - c) * q - f(p)) / (m.diffusion(p) * q); };
    auto dp_dq = [&](double q, double p) { return m.diffusion(p) * q / ((m.advection(p) - c) * q - f(p)); };

    Trace t;
    t.landmark_q.assign(landmarks.size(), std::nullopt);
    std::size_t next = 0;
    double x = start.p;
    double y = start.q;
    if (record) t.trajectory.push_back({x, y});
    t.last = {x, y};

    auto consume_landmarks = [&] {
        while (next < landmarks.size() && landmarks[next] == x) t.landmark_q[next++] = y;
    };
    consume_landmarks();
    if (x == p_stop) {
        t.reached_stop = true;
        return t;
    }
    if (y >= -kTurnTol) {
        t.p_turn = x;
        return t;
    }

    double k1 = dq_dp(x, y);
    const double slope_cap = kSlopeSwitch * std::max(1.0, std::abs(k1));
    double h = dir * std::max(span, 1e-300) * 1e-3;
    const double h_min = 1e-15 * std::max(1.0, std::abs(x));

    for (int steps = 0; steps < kMaxSteps; ++steps) {
        if (std::abs(k1) > slope_cap) {
            // Steep graph: integrate P as a function of Q up to Q = 0.
            double hq = 0.1 * std::abs(y);
            double kp = dp_dq(y, x);
            bool back_to_graph = false;
            for (; steps < kMaxSteps; ++steps) {
                if (std::abs(kp) * slope_cap > 10.0) {
                    back_to_graph = true;
                    break;
                }
                const double goal = -kTurnTol;
                bool landing = false;
                const double h_prop = hq;
                if (y + hq >= goal) {
                    hq = goal - y;
                    landing = true;
                }
                const auto s = ode::dopri5_step(dp_dq, y, x, hq, kp, kGraphTol);
                const bool reversed = dir * (s.y - x) < 0.0;
                if (!s.finite || reversed || s.error > 1.0) {
                    hq *= (!s.finite || reversed) ? 0.25 : ode::next_step_factor(s.error);
                    if (hq < 1e-300 || hq < 1e-16 * std::abs(y)) integration_failure("step underflow near Q = 0", x, y);
                    continue;
                }
                const double target = next < landmarks.size() ? landmarks[next] : p_stop;
                if (dir * (s.y - target) >= 0.0) {
                    // Crossed a landmark while nearly vertical: interpolate linearly in P.
                    const double w = (target - x) / (s.y - x);
                    const double q_at = y + w * (y + hq - y);
                    x = target;
                    y = q_at;
                    if (record) t.trajectory.push_back({x, y});
                    t.last = {x, y};
                    if (next < landmarks.size()) {
                        consume_landmarks();
                        hq = std::min(h_prop, 0.1 * std::abs(y));
                        kp = dp_dq(y, x);
                        continue;
                    }
                    t.reached_stop = true;
                    return t;
                }
                x = s.y;
                y = landing ? goal : y + hq;
                kp = s.slope_end;
                if (record) t.trajectory.push_back({x, y});
                t.last = {x, y};
                if (landing) {
                    t.p_turn = x;
                    return t;
                }
                hq = h_prop * ode::next_step_factor(s.error);
            }
            if (!back_to_graph) integration_failure("step limit exceeded", x, y);
            k1 = dq_dp(x, y);
            h = dir * std::max(1e-6 * span, std::abs(y / k1));
            continue;
        }

        const double target = next < landmarks.size() ? landmarks[next] : p_stop;
        const double remaining = target - x;
        const double h_prop = h;
        bool landing = false;
        if (std::abs(h) >= std::abs(remaining)) {
            h = remaining;
            landing = true;
        }
        const auto s = ode::dopri5_step(dq_dp, x, y, h, k1, kGraphTol);
        const bool crossed = s.y >= 0.0;
        if (!s.finite || crossed || s.error > 1.0) {
            h = (landing ? h : h_prop) * ((!s.finite || crossed) ? 0.25 : ode::next_step_factor(s.error));
            if (std::abs(h) < h_min) {
                // The graph is turning: hand over to the P(Q) branch.
                if (std::abs(k1) > 1.0) {
                    k1 = std::copysign(std::numeric_limits<double>::max(), k1);
                    continue;
                }
                integration_failure("step underflow", x, y);
            }
            continue;
        }
        x = landing ? target : x + h;
        y = s.y;
        k1 = s.slope_end;
        if (record) t.trajectory.push_back({x, y});
        t.last = {x, y};
        if (landing) {
            if (next < landmarks.size()) {
                consume_landmarks();
            } else {
                t.reached_stop = true;
                return t;
            }
            if (x == p_stop) {
                t.reached_stop = true;
                return t;
            }
        }
        h = (landing ? h_prop : h) * ode::next_step_factor(s.error);
        if (y >= -kTurnTol) {
            t.p_turn = x;
            return t;
        }
    }
    integration_failure("step limit exceeded", x, y);
}

ShootResult shoot(const GfkppModel& m, double c, const ManifoldSpec& spec, double p_target,
                  std::optional<double> section) {
    // Eigenvalues are always taken at this c, whatever speed the spec was built for.
    const Equilibrium origin = linearize(m, c, spec.origin.p_star);
    check_branch(origin, spec.branch);

    const double p_star = origin.p_star;
    const double dir = spec.branch == ManifoldBranch::unstable_wu ? -1.0 : 1.0;
    if (dir * (p_target - p_star) <= 0.0) {
        std::ostringstream os;
        os << "target p = " << p_target << " lies on the wrong side of p* = " << p_star << " for "
           << to_string(spec.branch);
        fail(ErrorCode::invalid_argument, os.str());
    }
    const double span = std::abs(p_target - p_star);
    const double eps = spec.offset > 0.0 ? spec.offset : kStartOffsetScale * span;
    const PhasePoint start = manifold_start(m, c, origin, branch_lambda(origin, spec.branch), dir * eps);

    // Arrival window just before the target, then the section, then the target itself.
    const double window = p_target - dir * kTargetWindow;
    std::vector<double> marks;
    std::optional<std::size_t> section_idx;
    std::size_t window_idx = 0;
    auto between = [&](double p) { return dir * (p - start.p) > 0.0 && dir * (p_target - p) > 0.0; };
    std::vector<std::pair<double, int>> tagged;
    if (between(window)) tagged.push_back({window, 0});
    if (section && between(*section)) tagged.push_back({*section, 1});
    std::sort(tagged.begin(), tagged.end(),
              [&](const auto& a, const auto& b) { return dir * a.first < dir * b.first; });
    for (std::size_t i = 0; i < tagged.size(); ++i) {
        marks.push_back(tagged[i].first);
        if (tagged[i].second == 0) window_idx = i;
        else section_idx = i;
    }
    const bool has_window = between(window);

    ShootResult r;
    r.p_target = p_target;
    const double tolerance_q = kConnectTol + 2.0 * arrival_slope(m, c, p_target) * kTargetWindow;

    // Trace up to the window first; decide arrival there before touching the target.
    const double first_stop = has_window ? window : p_target;
    std::vector<double> first_marks;
    for (std::size_t i = 0; i < marks.size(); ++i)
        if (dir * (first_stop - marks[i]) > 0.0) first_marks.push_back(marks[i]);
    Trace t = trace_graph(m, c, start, first_stop, first_marks, true);
    r.trajectory = std::move(t.trajectory);
    for (std::size_t i = 0; i < first_marks.size(); ++i)
        if (section_idx && marks[*section_idx] == first_marks[i]) r.q_at_section = t.landmark_q[i];

    if (t.p_turn) {
        r.p_turn = t.p_turn;
        r.outcome = std::abs(*t.p_turn - p_target) <= kTargetWindow ? Outcome::connect : Outcome::undershoot;
        return r;
    }
    if (section && *section == first_stop) r.q_at_section = t.last.q;
    if (has_window && std::abs(t.last.q) <= tolerance_q) {
        r.outcome = Outcome::connect;
        return r;
    }

    // Not arriving: continue through the target to confirm the overshoot.
    std::vector<double> rest_marks;
    for (double mk : marks)
        if (dir * (mk - first_stop) > 0.0) rest_marks.push_back(mk);
    Trace rest = trace_graph(m, c, t.last, p_target, rest_marks, true);
    r.trajectory.insert(r.trajectory.end(), rest.trajectory.begin() + 1, rest.trajectory.end());
    for (std::size_t i = 0; i < rest_marks.size(); ++i)
        if (section_idx && marks[*section_idx] == rest_marks[i]) r.q_at_section = rest.landmark_q[i];
    if (section && *section == p_target && rest.reached_stop) r.q_at_section = rest.last.q;
    (void)window_idx;

    if (rest.p_turn) {
        r.p_turn = rest.p_turn;
        r.outcome = std::abs(*rest.p_turn - p_target) <= kTargetWindow ? Outcome::connect : Outcome::undershoot;
        return r;
    }
    r.outcome = rest.last.q <= -kConnectTol ? Outcome::overshoot : Outcome::connect;
    return r;
}

double section_gap(const GfkppModel& m, double c, double p3, double p2, double p1) {
    if (!(p1 < p2 && p2 < p3)) fail(ErrorCode::invalid_argument, "section_gap needs p1 < p2 < p3");

    const Equilibrium top = linearize(m, c, p3);
    const Equilibrium bottom = linearize(m, c, p1);
    check_branch(top, ManifoldBranch::unstable_wu);
    check_branch(bottom, ManifoldBranch::stable_ws);

    const double eps_top = kStartOffsetScale * (p3 - p2);
    const double eps_bottom = kStartOffsetScale * (p2 - p1);
    const PhasePoint s3 = manifold_start(m, c, top, top.lambda_plus.real(), -eps_top);
    const PhasePoint s1 = manifold_start(m, c, bottom, bottom.lambda_minus.real(), eps_bottom);

    const Trace t3 = trace_graph(m, c, s3, p2, {}, false);
    if (!t3.reached_stop) {
        std::ostringstream os;
        os << "unstable manifold of p = " << p3 << " turns at p = " << t3.p_turn.value_or(NAN)
           << " before reaching the section p = " << p2 << " (c = " << c << ")";
        fail(ErrorCode::window_violation, os.str());
    }
    const Trace t1 = trace_graph(m, c, s1, p2, {}, false);
    if (!t1.reached_stop) {
        std::ostringstream os;
        os << "stable manifold of p = " << p1 << " turns at p = " << t1.p_turn.value_or(NAN)
           << " before reaching the section p = " << p2 << " (c = " << c << ")";
        fail(ErrorCode::window_violation, os.str());
    }
    return t3.last.q - t1.last.q;
}

SeparatrixComparison separatrix_compare(const GfkppModel& m, double c, double lo, double hi,
                                        std::optional<double> top) {
    if (!(lo < hi)) fail(ErrorCode::invalid_argument, "separatrix_compare needs lo < hi");
    const double p_top = top.value_or(hi);
    if (p_top < hi) fail(ErrorCode::invalid_argument, "separatrix_compare needs top >= hi");
    if (!(m.reaction(0.5 * (lo + hi)) > 0.0))
        fail(ErrorCode::precondition, "separatrix comparison needs f > 0 between the two equilibria");

    SeparatrixComparison out;
    out.c_used = c;
    Equilibrium node = linearize(m, c, lo);
    if (node.etype == EquilibriumType::stable_node && !fast_direction_separated(node)) {
        out.c_used = c + kDegenerateShift;
        node = linearize(m, out.c_used, lo);
    }
    if (node.etype != EquilibriumType::stable_node) {
        std::ostringstream os;
        os << "equilibrium p = " << lo << " is a " << to_string(node.etype) << " at c = " << c
           << "; the speed is below the linear spreading bound";
        fail(ErrorCode::precondition, os.str());
    }
    check_branch(node, ManifoldBranch::fast_stable_wss);
    const Equilibrium saddle = linearize(m, out.c_used, p_top);
    check_branch(saddle, ManifoldBranch::unstable_wu);

    const double span = hi - lo;
    for (int j = 1; j <= 9; ++j) out.checkpoints.push_back(lo + span * j / 10.0);
    std::vector<double> down(out.checkpoints.rbegin(), out.checkpoints.rend());

    const double eps = kStartOffsetScale * span;
    const PhasePoint su =
        manifold_start(m, out.c_used, saddle, saddle.lambda_plus.real(), -kStartOffsetScale * (p_top - lo));
    const PhasePoint sf = manifold_start(m, out.c_used, node, node.lambda_minus.real(), eps);

    const Trace tu = trace_graph(m, out.c_used, su, out.checkpoints.front(),
                                 std::span<const double>(down).subspan(0, 8), false);
    const Trace tf = trace_graph(m, out.c_used, sf, out.checkpoints.back(),
                                 std::span<const double>(out.checkpoints).subspan(0, 8), false);

    out.q_unstable.assign(9, std::nullopt);
    out.q_fast.assign(9, std::nullopt);
    for (int i = 0; i < 8; ++i) out.q_unstable[8 - i] = tu.landmark_q[i];
    if (tu.reached_stop) out.q_unstable[0] = tu.last.q;
    for (int i = 0; i < 8; ++i) out.q_fast[i] = tf.landmark_q[i];
    if (tf.reached_stop) out.q_fast[8] = tf.last.q;
    out.fast_turn = tf.p_turn;
    if (tu.p_turn && *tu.p_turn >= hi) {
        out.unstable_turn = tu.p_turn;
        out.admissible = !tf.p_turn.has_value();
        return out;
    }

    // A fast manifold that turns back to Q = 0 inside the interval lies above
    // every curve that stays in Q < 0 there, so the unstable manifold is below it.
    bool admissible = !tf.p_turn.has_value();
    bool compared = false;
    for (int i = 0; i < 9; ++i) {
        if (!out.q_unstable[i] || !out.q_fast[i]) continue;
        compared = true;
        if (*out.q_unstable[i] < *out.q_fast[i]) admissible = false;
    }
    if (!compared && admissible)
        fail(ErrorCode::integration_failure, "separatrix comparison found no common checkpoint");
    out.admissible = admissible;
    return out;
}

void write_trajectory_csv(std::ostream& os, std::span<const PhasePoint> traj) {
    os << "p,q\n";
    for (const auto& pt : traj) os << format_sig(pt.p, 17) << ',' << format_sig(pt.q, 17) << '\n';
}

}  // namespace gfkpp
