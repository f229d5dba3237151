#include "gfkpp/model.hpp"

#include "gfkpp/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gfkpp {

std::string_view to_string(ReactionKind kind) noexcept {
    switch (kind) {
        case ReactionKind::quadratic: return "quadratic";
        case ReactionKind::cubic: return "cubic";
        case ReactionKind::polynomial: return "polynomial";
    }
    return "?";
}

std::string_view to_string(EquilibriumType t) noexcept {
    switch (t) {
        case EquilibriumType::saddle: return "saddle";
        case EquilibriumType::stable_node: return "stable_node";
        case EquilibriumType::spiral_sink: return "spiral_sink";
        case EquilibriumType::center: return "center";
        case EquilibriumType::spiral_source: return "spiral_source";
        case EquilibriumType::unstable_node: return "unstable_node";
    }
    return "?";
}

namespace {

double coeff_scale(const Polynomial& p) {
    double s = 1.0;
    for (double c : p.coeffs()) s = std::max(s, std::abs(c));
    return s;
}

std::vector<double> validated_roots(const Polynomial& poly) {
    if (poly.is_zero()) fail(ErrorCode::degenerate_reaction, "reaction is identically zero");
    const double scale = coeff_scale(poly);
    const double tol = 1e-12 * scale;
    if (std::abs(poly(0.0)) > tol || std::abs(poly(1.0)) > tol) {
        std::ostringstream os;
        os << "reaction must vanish at 0 and 1 (f(0) = " << poly(0.0) << ", f(1) = " << poly(1.0) << ")";
        fail(ErrorCode::assumption_violation, os.str());
    }
    std::vector<double> roots = real_roots_in(poly, 0.0, 1.0);
    if (roots.empty() || roots.front() > 1e-9) roots.insert(roots.begin(), 0.0);
    if (roots.back() < 1.0 - 1e-9) roots.push_back(1.0);
    roots.front() = 0.0;
    roots.back() = 1.0;

    for (std::size_t i = 1; i < roots.size(); ++i) {
        if (roots[i] - roots[i - 1] < 1e-6) {
            std::ostringstream os;
            os << "zeros of f at p = " << roots[i - 1] << " and " << roots[i] << " form a multiple root";
            fail(ErrorCode::degenerate_reaction, os.str());
        }
    }
    const Polynomial dp = poly.derivative();
    for (double r : roots) {
        if (std::abs(poly(r)) > tol) {
            std::ostringstream os;
            os << "root polish failed at p = " << r << " (|f| = " << std::abs(poly(r)) << ")";
            fail(ErrorCode::assumption_violation, os.str());
        }
        if (std::abs(dp(r)) < 1e-10) {
            std::ostringstream os;
            os << "degenerate zero of f at p = " << r << " (f'(p) = " << dp(r) << ")";
            fail(ErrorCode::degenerate_reaction, os.str());
        }
    }
    return roots;
}

Polynomial cubic_poly(double k, double p0) {
    // k P (1 - P)(P - p0) = k (-p0 P + (1 + p0) P^2 - P^3)
    return Polynomial({0.0, -k * p0, k * (1.0 + p0), -k});
}

}  // namespace

ReactionFn::Form ReactionFn::make_form(ReactionKind kind, double k, double p0, Polynomial poly) {
    Form f;
    f.kind = kind;
    f.k = k;
    f.p0 = p0;
    f.poly = std::move(poly);
    f.dpoly = f.poly.derivative();
    f.ddpoly = f.dpoly.derivative();
    switch (kind) {
        case ReactionKind::quadratic: f.roots = {0.0, 1.0}; break;
        case ReactionKind::cubic: f.roots = {0.0, p0, 1.0}; break;
        case ReactionKind::polynomial: f.roots = validated_roots(f.poly); break;
    }
    return f;
}

ReactionFn ReactionFn::quadratic(double k) {
    if (!std::isfinite(k)) fail(ErrorCode::invalid_argument, "quadratic reaction needs a finite k");
    if (k == 0.0) fail(ErrorCode::degenerate_reaction, "quadratic reaction with k = 0 is identically zero");
    ReactionFn r;
    r.form_ = make_form(ReactionKind::quadratic, k, 0.0, Polynomial({0.0, k, -k}));
    r.mirror_ = make_form(ReactionKind::quadratic, -k, 0.0, Polynomial({0.0, -k, k}));
    return r;
}

ReactionFn ReactionFn::cubic(double k, double p0) {
    if (!std::isfinite(k) || !std::isfinite(p0))
        fail(ErrorCode::invalid_argument, "cubic reaction needs finite k and p0");
    if (k == 0.0) fail(ErrorCode::degenerate_reaction, "cubic reaction with k = 0 is identically zero");
    if (!(p0 > 0.0 && p0 < 1.0)) fail(ErrorCode::invalid_argument, "cubic reaction needs p0 in (0, 1)");
    const double q0 = 1.0 - p0;
    ReactionFn r;
    r.form_ = make_form(ReactionKind::cubic, k, p0, cubic_poly(k, p0));
    r.mirror_ = make_form(ReactionKind::cubic, k, q0, cubic_poly(k, q0));
    return r;
}

ReactionFn ReactionFn::polynomial(std::vector<double> coeffs_ascending) {
    for (double c : coeffs_ascending)
        if (!std::isfinite(c)) fail(ErrorCode::invalid_argument, "polynomial coefficients must be finite");
    Polynomial p(std::move(coeffs_ascending));
    Polynomial mirror = -p.compose_affine(1.0, -1.0);
    ReactionFn r;
    r.form_ = make_form(ReactionKind::polynomial, 0.0, 0.0, std::move(p));
    r.mirror_ = make_form(ReactionKind::polynomial, 0.0, 0.0, std::move(mirror));
    // The mirror's zeros are the reflections of ours; reuse them exactly.
    r.mirror_.roots.clear();
    for (auto it = r.form_.roots.rbegin(); it != r.form_.roots.rend(); ++it)
        r.mirror_.roots.push_back(1.0 - *it);
    return r;
}

double ReactionFn::operator()(double p) const noexcept {
    switch (form_.kind) {
        case ReactionKind::quadratic: return form_.k * p * (1.0 - p);
        case ReactionKind::cubic: return form_.k * p * (1.0 - p) * (p - form_.p0);
        case ReactionKind::polynomial: break;
    }
    return form_.poly(p);
}

double ReactionFn::derivative(double p) const noexcept { return form_.dpoly(p); }

double ReactionFn::second_derivative(double p) const noexcept { return form_.ddpoly(p); }

ReactionFn ReactionFn::mirrored() const {
    ReactionFn r;
    r.form_ = mirror_;
    r.mirror_ = form_;
    return r;
}

PotentialFn potential(const ReactionFn& f) { return PotentialFn{f.poly().antiderivative()}; }

void GfkppModel::validate() const {
    if (!std::isfinite(d1) || !std::isfinite(d2) || !std::isfinite(m1) || !std::isfinite(m2))
        fail(ErrorCode::invalid_argument, "model coefficients must be finite");
    if (!(d1 > 0.0) || !(d2 > 0.0)) fail(ErrorCode::invalid_argument, "diffusivities d1, d2 must be positive");
}

GfkppModel make_model(double d1, double d2, double m1, double m2, ReactionFn reaction) {
    GfkppModel m{d1, d2, m1, m2, std::move(reaction)};
    m.validate();
    return m;
}

Equilibrium linearize(const GfkppModel& m, double c, double p_star) {
    if (std::abs(m.reaction(p_star)) > kRootTolerance) {
        std::ostringstream os;
        os << "p = " << p_star << " is not an equilibrium (f = " << m.reaction(p_star) << ")";
        fail(ErrorCode::not_equilibrium, os.str());
    }
    Equilibrium e;
    e.p_star = p_star;
    const double d = m.diffusion(p_star);
    e.alpha = m.reaction.derivative(p_star) / d;
    e.beta = (m.advection(p_star) - c) / d;

    const double disc = e.beta * e.beta - 4.0 * e.alpha;
    if (disc >= 0.0) {
        // Cancellation-free pair: the larger-magnitude root first, the other via the product.
        const double s = std::sqrt(disc);
        const double big = 0.5 * (e.beta + (e.beta >= 0.0 ? s : -s));
        const double small = big != 0.0 ? e.alpha / big : 0.0;
        const double hi = std::max(big, small);
        const double lo = std::min(big, small);
        e.lambda_plus = {hi, 0.0};
        e.lambda_minus = {lo, 0.0};
    } else {
        const double im = 0.5 * std::sqrt(-disc);
        e.lambda_plus = {0.5 * e.beta, im};
        e.lambda_minus = {0.5 * e.beta, -im};
    }

    if (e.alpha < 0.0) {
        e.etype = EquilibriumType::saddle;
    } else if (e.beta < 0.0) {
        e.etype = disc >= 0.0 ? EquilibriumType::stable_node : EquilibriumType::spiral_sink;
    } else if (e.beta > 0.0) {
        e.etype = disc >= 0.0 ? EquilibriumType::unstable_node : EquilibriumType::spiral_source;
    } else {
        e.etype = EquilibriumType::center;
    }
    return e;
}

GfkppModel apply_sym1(const GfkppModel& m) {
    return GfkppModel{m.d2, m.d1, m.m2, m.m1, m.reaction.mirrored()};
}

GfkppModel apply_sym2(const GfkppModel& m) {
    // 0.0 - x keeps +0.0 for x = 0 so the M = 0 model is a fixed point bit for bit.
    return GfkppModel{m.d1, m.d2, 0.0 - m.m1, 0.0 - m.m2, m.reaction};
}

ReactionFn reaction_from_growth_rates(double r1, double r2) {
    if (r1 == r2) fail(ErrorCode::degenerate_reaction, "equal growth rates give f = 0");
    return ReactionFn::quadratic(r1 - r2);
}

ReactionFn reaction_from_logistic(double r1, double r2, double alpha1, double alpha2) {
    if (!(alpha1 > 0.0) || !(alpha2 > 0.0))
        fail(ErrorCode::invalid_argument, "relative carrying capacities alpha1, alpha2 must be positive");
    const double a = std::isinf(alpha1) ? 0.0 : r1 / alpha1;
    const double b = std::isinf(alpha2) ? 0.0 : r2 / alpha2;
    // bracket g(p) = (r1 - r2 + b) - (a + b) p
    const Polynomial bracket({r1 - r2 + b, -(a + b)});
    const Polynomial logistic({0.0, 1.0, -1.0});
    return ReactionFn::polynomial((logistic * bracket).coeffs());
}

}  // namespace gfkpp
