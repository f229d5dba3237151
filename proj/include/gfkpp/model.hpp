#pragma once

#include "gfkpp/polynomial.hpp"

#include <complex>
#include <string_view>
#include <vector>

namespace gfkpp {

/// Tolerance for "f(p*) = 0" when a caller claims p* is an equilibrium.
inline constexpr double kRootTolerance = 1e-9;

enum class ReactionKind { quadratic, cubic, polynomial };

std::string_view to_string(ReactionKind kind) noexcept;

/// The nonlinearity f(P), held as exact polynomial coefficients together with
/// its validated zeros in [0, 1].
///
/// quadratic(k) is k P (1 - P); cubic(k, p0) is k P (1 - P)(P - p0). Any k != 0
/// is accepted; a negative quadratic is the f < 0 monostable case.
///
/// The reflected nonlinearity -f(1 - P) is computed once at construction and
/// stored alongside, so mirrored() is an exact involution.
class ReactionFn {
public:
    static ReactionFn quadratic(double k);
    static ReactionFn cubic(double k, double p0);
    static ReactionFn polynomial(std::vector<double> coeffs_ascending);

    ReactionKind kind() const noexcept { return form_.kind; }
    /// Amplitude for quadratic and cubic kinds, 0 for general polynomials.
    double k() const noexcept { return form_.k; }
    /// Interior root for the cubic kind, 0 otherwise.
    double p0() const noexcept { return form_.p0; }
    const Polynomial& poly() const noexcept { return form_.poly; }
    /// Zeros of f in [0, 1], strictly increasing, first 0 and last 1.
    const std::vector<double>& roots() const noexcept { return form_.roots; }
    /// True for quadratic with k < 0.
    bool sign_flagged() const noexcept { return form_.kind == ReactionKind::quadratic && form_.k < 0.0; }

    double operator()(double p) const noexcept;
    double derivative(double p) const noexcept;
    double second_derivative(double p) const noexcept;

    /// -f(1 - P).
    ReactionFn mirrored() const;

    friend bool operator==(const ReactionFn& a, const ReactionFn& b) {
        return a.form_.kind == b.form_.kind && a.form_.k == b.form_.k &&
               a.form_.p0 == b.form_.p0 && a.form_.poly == b.form_.poly;
    }

private:
    struct Form {
        ReactionKind kind = ReactionKind::polynomial;
        double k = 0.0;
        double p0 = 0.0;
        Polynomial poly;
        Polynomial dpoly;
        Polynomial ddpoly;
        std::vector<double> roots;
    };

    ReactionFn() = default;
    static Form make_form(ReactionKind kind, double k, double p0, Polynomial poly);

    Form form_;
    Form mirror_;
};

/// F(P) = integral of f from 0 to P.
struct PotentialFn {
    Polynomial antiderivative;
    double operator()(double p) const noexcept { return antiderivative(p); }
};

PotentialFn potential(const ReactionFn& f);

/// Parameters of p_t = D(p) p_xx - M(p) p_x + f(p) with D, M affine in p.
struct GfkppModel {
    double d1 = 1.0;
    double d2 = 1.0;
    double m1 = 0.0;
    double m2 = 0.0;
    ReactionFn reaction = ReactionFn::quadratic(1.0);

    /// Throws invalid_argument unless d1, d2 > 0 and every value is finite.
    void validate() const;

    double diffusion(double p) const noexcept { return p * d2 + (1.0 - p) * d1; }
    double advection(double p) const noexcept { return p * m2 + (1.0 - p) * m1; }

    friend bool operator==(const GfkppModel&, const GfkppModel&) = default;
};

GfkppModel make_model(double d1, double d2, double m1, double m2, ReactionFn reaction);

enum class EquilibriumType { saddle, stable_node, spiral_sink, center, spiral_source, unstable_node };

std::string_view to_string(EquilibriumType t) noexcept;

/// Linearization of the first-order travelling-wave system at (p_star, 0).
struct Equilibrium {
    double p_star = 0.0;
    double alpha = 0.0;  ///< f'(p*) / D(p*)
    double beta = 0.0;   ///< (M(p*) - c) / D(p*)
    std::complex<double> lambda_plus;
    std::complex<double> lambda_minus;
    EquilibriumType etype = EquilibriumType::saddle;

    bool real_eigenvalues() const noexcept { return lambda_plus.imag() == 0.0; }
};

/// Roots of lambda^2 - beta lambda + alpha = 0, ordered Re lambda+ >= Re lambda-.
Equilibrium linearize(const GfkppModel& m, double c, double p_star);

/// P -> 1 - P, f -> -f(1 - P), (D1, D2) and (M1, M2) swapped. Speeds are unchanged.
GfkppModel apply_sym1(const GfkppModel& m);
/// (M1, M2) -> (-M1, -M2). Callers negate speeds.
GfkppModel apply_sym2(const GfkppModel& m);

/// f(p) = (r1 - r2) p (1 - p), from two genotypes with linear growth.
ReactionFn reaction_from_growth_rates(double r1, double r2);
/// f(p) = p (1 - p) [(r1 - r2) - (r1/alpha1) p + (r2/alpha2)(1 - p)], from
/// independent logistic growth with alpha_i = K_i / N. Infinite alpha drops the
/// corresponding logistic term.
ReactionFn reaction_from_logistic(double r1, double r2, double alpha1, double alpha2);

}  // namespace gfkpp
