#pragma once

#include <span>
#include <vector>

namespace gfkpp {

/// Dense real polynomial, coefficients in ascending order of degree.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);

    const std::vector<double>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }

    double operator()(double x) const noexcept;
    Polynomial derivative() const;
    /// Antiderivative with zero constant term.
    Polynomial antiderivative() const;
    /// p(a + b x), expanded.
    Polynomial compose_affine(double a, double b) const;

    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(double s) const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-() const { return *this * -1.0; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<double> c_;
};

/// Real roots of p inside [lo, hi], sorted, each Newton-polished.
/// Candidates come from the companion-matrix eigenvalues.
std::vector<double> real_roots_in(const Polynomial& p, double lo, double hi);

}  // namespace gfkpp
