#include "gfkpp/speed.hpp"

#include "gfkpp/error.hpp"
#include "gfkpp/shooting.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <utility>

namespace gfkpp {

std::string_view to_string(ExistenceCase c) noexcept {
    switch (c) {
        case ExistenceCase::A1: return "A1";
        case ExistenceCase::A2: return "A2";
        case ExistenceCase::B: return "B";
        case ExistenceCase::C1: return "C1";
        case ExistenceCase::C2: return "C2";
        case ExistenceCase::D: return "D";
    }
    return "?";
}

std::string_view to_string(Regime r) noexcept {
    switch (r) {
        case Regime::half_line_closed_right: return "half_line_closed_right";
        case Regime::half_line_closed_left: return "half_line_closed_left";
        case Regime::unique: return "unique";
        case Regime::half_open_interval: return "half_open_interval";
        case Regime::half_open_interval_left: return "half_open_interval_left";
        case Regime::empty: return "empty";
    }
    return "?";
}

std::string_view to_string(OrbitType t) noexcept {
    return t == OrbitType::type_a ? "TypeA" : "TypeB";
}

std::string_view to_string(FrontKind k) noexcept {
    switch (k) {
        case FrontKind::not_applicable: return "n/a";
        case FrontKind::pulled: return "pulled";
        case FrontKind::pushed: return "pushed";
    }
    return "?";
}

namespace {

bool is_saddle(const ReactionFn& f, double r) { return f.derivative(r) < 0.0; }

void require_equal_diffusion(const GfkppModel& m) {
    if (std::abs(m.d1 - m.d2) > 1e-12)
        fail(ErrorCode::wrong_oracle, "closed form needs D1 = D2; use the numeric solver");
}

}  // namespace

ExistenceCase classify_existence(const GfkppModel& m) {
    const auto& f = m.reaction;
    const auto& roots = f.roots();
    for (double r : roots) {
        if (std::abs(f.derivative(r)) < 1e-10) {
            std::ostringstream os;
            os << "degenerate zero of f at p = " << r;
            fail(ErrorCode::assumption_violation, os.str());
        }
    }
    const std::size_t interior = roots.size() - 2;
    const double d0 = f.derivative(0.0);
    const double d1 = f.derivative(1.0);
    if (interior == 0) return f(0.5) > 0.0 ? ExistenceCase::A1 : ExistenceCase::A2;
    if (d0 * d1 > 0.0) return interior == 1 ? ExistenceCase::B : ExistenceCase::D;
    return d0 > 0.0 ? ExistenceCase::C1 : ExistenceCase::C2;
}

SpeedSet negate(const SpeedSet& s) {
    SpeedSet out = s;
    switch (s.regime) {
        case Regime::half_line_closed_right:
            out.regime = Regime::half_line_closed_left;
            out.c_star = -s.c_star;
            break;
        case Regime::half_line_closed_left:
            out.regime = Regime::half_line_closed_right;
            out.c_star = -s.c_star;
            break;
        case Regime::unique:
            out.c_star = -s.c_star;
            break;
        case Regime::half_open_interval:
            out.regime = Regime::half_open_interval_left;
            out.c_star = -s.c_secondary.value();
            out.c_secondary = -s.c_star;
            break;
        case Regime::half_open_interval_left:
            out.regime = Regime::half_open_interval;
            out.c_star = -s.c_secondary.value();
            out.c_secondary = -s.c_star;
            break;
        case Regime::empty:
            break;
    }
    return out;
}

double linear_spreading_speed(const GfkppModel& m, double lo) {
    const double fp = m.reaction.derivative(lo);
    if (!(fp > 0.0)) fail(ErrorCode::precondition, "linear spreading speed needs f' > 0 at the node");
    return m.advection(lo) + 2.0 * std::sqrt(fp * m.diffusion(lo));
}

SpeedSet closed_form_quadratic(const GfkppModel& m) {
    const auto& f = m.reaction;
    if (f.kind() != ReactionKind::quadratic || !(f.k() > 0.0))
        fail(ErrorCode::wrong_oracle, "closed form needs a quadratic reaction with k > 0");
    require_equal_diffusion(m);
    const double kd = f.k() * m.d1;
    const double pulled = m.m1 + 2.0 * std::sqrt(kd);
    SpeedSet s;
    s.regime = Regime::half_line_closed_right;
    if (m.m2 <= pulled) {
        s.c_star = pulled;
        s.front = FrontKind::pulled;
    } else {
        s.c_star = 0.5 * (m.m1 + m.m2) + 2.0 * kd / (m.m2 - m.m1);
        s.front = FrontKind::pushed;
    }
    return s;
}

CubicClosedForm closed_form_cubic(const GfkppModel& m) {
    const auto& f = m.reaction;
    if (f.kind() != ReactionKind::cubic || !(f.k() > 0.0))
        fail(ErrorCode::wrong_oracle, "closed form needs a cubic reaction with k > 0");
    require_equal_diffusion(m);
    const double kd = f.k() * m.d1;
    const double dm = m.m2 - m.m1;
    const double root = std::sqrt(dm * dm + 8.0 * kd);
    CubicClosedForm out;
    out.speeds.regime = Regime::unique;
    out.speeds.c_star = 0.5 * (m.m1 + m.m2) + 2.0 * kd * (1.0 - 2.0 * f.p0()) / (dm + root);
    out.zeta = 4.0 / (root - dm);
    return out;
}

SpeedSet monostable_speed(const GfkppModel& m, double lo, double hi) {
    const double c_pull = linear_spreading_speed(m, lo);
    SpeedSet s;
    s.regime = Regime::half_line_closed_right;
    auto admissible = [&](double c) { return separatrix_compare(m, c, lo, hi).admissible; };

    if (admissible(c_pull + kPulledProbe)) {
        s.c_star = c_pull;
        s.front = FrontKind::pulled;
        return s;
    }

    const double limit = std::ldexp(1.0, 16) * (1.0 + std::abs(m.m1) + std::abs(m.m2));
    double delta = std::max(1.0, std::abs(m.m2 - m.m1));
    double c_lo = c_pull;
    double c_hi = c_pull + delta;
    while (!admissible(c_hi)) {
        c_lo = c_hi;
        delta *= 2.0;
        if (delta > limit) {
            std::ostringstream os;
            os << "no admissible speed found up to c = " << c_pull + delta / 2.0;
            fail(ErrorCode::no_upper_bound, os.str());
        }
        c_hi = c_pull + delta;
    }
    while (c_hi - c_lo > kSpeedWidth) {
        const double mid = 0.5 * (c_lo + c_hi);
        (admissible(mid) ? c_hi : c_lo) = mid;
    }
    s.c_star = 0.5 * (c_lo + c_hi);
    s.front = FrontKind::pushed;
    return s;
}

SpeedSet minimal_speed_numeric(const GfkppModel& m) {
    if (classify_existence(m) != ExistenceCase::A1)
        fail(ErrorCode::precondition, "minimal_speed_numeric needs f > 0 on (0, 1)");
    return monostable_speed(m, 0.0, 1.0);
}

SpeedSet unique_speed_bistable(const GfkppModel& m, double p3, double p2, double p1) {
    const auto& f = m.reaction;
    if (!(p1 < p2 && p2 < p3)) fail(ErrorCode::invalid_argument, "unique_speed_bistable needs p1 < p2 < p3");
    if (!(f(0.5 * (p1 + p2)) < 0.0 && f(0.5 * (p2 + p3)) > 0.0))
        fail(ErrorCode::precondition, "unique_speed_bistable needs f < 0 on (p1, p2) and f > 0 on (p2, p3)");

    const double c23 = monostable_speed(m, p2, p3).c_star;
    const GfkppModel mirror = apply_sym2(apply_sym1(m));
    const double c12 = monostable_speed(mirror, 1.0 - p2, 1.0 - p1).c_star;

    // Step inward from the bracket ends until both manifolds cross the section.
    auto gap_inside = [&](double c_edge, double sign) {
        double shift = 1e-6 * std::max(1.0, std::abs(c23) + std::abs(c12));
        for (int i = 0; i < 12; ++i, shift *= 4.0) {
            const double c = c_edge + sign * shift;
            try {
                return std::pair{c, section_gap(m, c, p3, p2, p1)};
            } catch (const Error& e) {
                if (e.code() != ErrorCode::window_violation) throw;
            }
        }
        std::ostringstream os;
        os << "manifolds never reach the section p = " << p2 << " near c = " << c_edge;
        fail(ErrorCode::bracket_failure, os.str());
    };
    auto [c_lo, w_lo] = gap_inside(-c12, 1.0);
    auto [c_hi, w_hi] = gap_inside(c23, -1.0);
    if (!(c_lo < c_hi) || !(w_lo < 0.0) || !(w_hi > 0.0)) {
        std::ostringstream os;
        os.precision(12);
        os << "section gap does not change sign on [" << c_lo << ", " << c_hi << "]: w = " << w_lo << ", "
           << w_hi;
        fail(ErrorCode::bracket_failure, os.str());
    }

    SpeedSet s;
    s.regime = Regime::unique;
    while (c_hi - c_lo > kBistableWidth) {
        const double mid = 0.5 * (c_lo + c_hi);
        const double w = section_gap(m, mid, p3, p2, p1);
        if (w == 0.0) {
            s.c_star = mid;
            return s;
        }
        (w > 0.0 ? c_hi : c_lo) = mid;
    }
    s.c_star = 0.5 * (c_lo + c_hi);
    return s;
}

namespace {

class Cascade {
public:
    explicit Cascade(const GfkppModel& m) : m_(m), roots_(m.reaction.roots()) {}

    const CascadeNode& connect(std::size_t top, std::size_t bottom) {
        if (const auto it = memo_.find({top, bottom}); it != memo_.end()) return it->second;
        CascadeNode node;
        try {
            node = solve(top, bottom);
        } catch (const Error& e) {
            std::ostringstream os;
            os << "cascade link p = " << roots_[top] << " -> " << roots_[bottom] << ": " << e.what();
            fail(e.code(), os.str());
        }
        order_.push_back({top, bottom});
        return memo_.emplace(std::pair{top, bottom}, std::move(node)).first->second;
    }

    std::vector<CascadeNode> nodes() const {
        std::vector<CascadeNode> out;
        for (const auto& key : order_) out.push_back(memo_.at(key));
        return out;
    }

private:
    bool saddle(std::size_t i) const { return is_saddle(m_.reaction, roots_[i]); }

    CascadeNode solve(std::size_t top, std::size_t bottom) {
        CascadeNode node;
        node.upper = top;
        node.lower = bottom;
        const double pt = roots_[top];
        const double pb = roots_[bottom];

        if (bottom + 1 == top) {
            node.c_star_pair = monostable_speed(m_, pb, pt).c_star;
            return node;
        }
        if (bottom + 2 == top && saddle(bottom)) {
            node.c_star_pair = unique_speed_bistable(m_, pt, roots_[top - 1], pb).c_star;
            return node;
        }

        std::size_t last = top;
        for (std::size_t s = bottom + 1; s + 1 < top; ++s) {
            if (!saddle(s)) continue;
            if (connect(top, s).exists) {
                last = s;
                break;
            }
        }
        if (last == top) fail(ErrorCode::bracket_failure, "no connected saddle below the top equilibrium");

        const double c_lm = connect(top, last).c_star_pair;
        const CascadeNode& rest = connect(last, bottom);
        node.chain.push_back(last);
        node.chain.insert(node.chain.end(), rest.chain.begin(), rest.chain.end());
        if (!rest.exists) {
            node.exists = false;
            return node;
        }
        const double c_kl = rest.c_star_pair;
        if (std::abs(c_lm - c_kl) <= kTieTolerance) {
            node.exists = false;
            node.boundary_tie = true;
            return node;
        }
        if (c_kl > c_lm) {
            node.exists = false;
            return node;
        }

        double lo = c_kl;
        double hi = c_lm;
        if (saddle(bottom)) {
            while (hi - lo > kBistableWidth) {
                const double mid = 0.5 * (lo + hi);
                const auto r = shoot(m_, mid, make_manifold(m_, mid, pt, ManifoldBranch::unstable_wu), pb);
                if (r.outcome == Outcome::connect) {
                    lo = hi = mid;
                    break;
                }
                (r.outcome == Outcome::undershoot ? hi : lo) = mid;
            }
            node.c_star_pair = 0.5 * (lo + hi);
        } else {
            const double strip_top = roots_[bottom + 1];
            while (hi - lo > kSpeedWidth) {
                const double mid = 0.5 * (lo + hi);
                (separatrix_compare(m_, mid, pb, strip_top, pt).admissible ? hi : lo) = mid;
            }
            node.c_star_pair = 0.5 * (lo + hi);
            node.c_upper = c_lm;
        }
        return node;
    }

    const GfkppModel& m_;
    const std::vector<double>& roots_;
    std::map<std::pair<std::size_t, std::size_t>, CascadeNode> memo_;
    std::vector<std::pair<std::size_t, std::size_t>> order_;
};

SpeedSet from_node(const CascadeNode& n) {
    SpeedSet s;
    s.boundary_tie = n.boundary_tie;
    if (!n.exists) return s;
    s.c_star = n.c_star_pair;
    if (n.c_upper) {
        s.regime = Regime::half_open_interval;
        s.c_secondary = n.c_upper;
    } else {
        s.regime = Regime::unique;
    }
    return s;
}

}  // namespace

CascadeResult cascade_speeds(const GfkppModel& m) {
    const auto& roots = m.reaction.roots();
    if (roots.size() < 3) fail(ErrorCode::precondition, "cascade needs at least one interior root");
    if (!is_saddle(m.reaction, 1.0))
        fail(ErrorCode::precondition, "cascade needs f'(1) < 0; reflect the model first");
    Cascade cascade(m);
    CascadeResult out;
    const CascadeNode& top = cascade.connect(roots.size() - 1, 0);
    out.speeds = from_node(top);
    out.nodes = cascade.nodes();
    return out;
}

SpeedSet typea_speed_set(const GfkppModel& m) {
    const ExistenceCase kind = classify_existence(m);
    const double d0 = m.reaction.derivative(0.0);
    const double d1 = m.reaction.derivative(1.0);
    switch (kind) {
        case ExistenceCase::A1:
            return monostable_speed(m, 0.0, 1.0);
        case ExistenceCase::A2:
        case ExistenceCase::C2: {
            SpeedSet s = negate(typea_speed_set(apply_sym2(apply_sym1(m))));
            s.orbit_type = OrbitType::type_a;
            return s;
        }
        case ExistenceCase::B:
        case ExistenceCase::D:
            if (!(d0 < 0.0 && d1 < 0.0)) {
                std::ostringstream os;
                os << "case " << to_string(kind) << " with f'(0) > 0 and f'(1) > 0 is not supported";
                fail(ErrorCode::precondition, os.str());
            }
            return cascade_speeds(m).speeds;
        case ExistenceCase::C1:
            return cascade_speeds(m).speeds;
    }
    fail(ErrorCode::invalid_argument, "unknown existence case");
}

SpeedSet type_b_speed_set(const GfkppModel& m) {
    SpeedSet s = typea_speed_set(apply_sym1(m));
    s.orbit_type = OrbitType::type_b;
    return s;
}

}  // namespace gfkpp
