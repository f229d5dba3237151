#include "gfkpp/polynomial.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace gfkpp {

Polynomial::Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

double Polynomial::operator()(double x) const noexcept {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<double> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = static_cast<double>(i) * c_[i];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
    if (c_.empty()) return {};
    std::vector<double> a(c_.size() + 1, 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i) a[i + 1] = c_[i] / static_cast<double>(i + 1);
    return Polynomial(std::move(a));
}

Polynomial Polynomial::compose_affine(double a, double b) const {
    // Horner in polynomial arithmetic: p(a + b x) = c0 + (a + b x)(c1 + (a + b x)(...))
    const Polynomial inner({a, b});
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Polynomial({*it});
    return acc;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (c_.empty() || rhs.c_.empty()) return {};
    std::vector<double> r(c_.size() + rhs.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) r[i + j] += c_[i] * rhs.c_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(double s) const {
    std::vector<double> r = c_;
    for (double& v : r) v *= s;
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<double> r(std::max(c_.size(), rhs.c_.size()), 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) r[i] += rhs.c_[i];
    return Polynomial(std::move(r));
}

namespace {

double newton_polish(const Polynomial& p, const Polynomial& dp, double x) {
    for (int it = 0; it < 50; ++it) {
        const double fx = p(x);
        const double dfx = dp(x);
        if (fx == 0.0 || dfx == 0.0) break;
        const double step = fx / dfx;
        x -= step;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

}  // namespace

std::vector<double> real_roots_in(const Polynomial& p, double lo, double hi) {
    std::vector<double> out;
    const int n = p.degree();
    if (n < 1) return out;

    const auto& c = p.coeffs();
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];

    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    const auto& ev = solver.eigenvalues();
    const Polynomial dp = p.derivative();
    const double margin = 1e-6 * std::max(1.0, hi - lo);
    double scale = 1.0;
    for (double v : c) scale = std::max(scale, std::abs(v));

    for (int i = 0; i < n; ++i) {
        const double re = ev[i].real();
        const double im = ev[i].imag();
        // A multiple root splits into a near-real cluster; keep it if polishing lands on a zero.
        const double rel_im = std::abs(im) / std::max(1.0, std::abs(re));
        if (rel_im > 1e-4) continue;
        if (re < lo - margin || re > hi + margin) continue;
        const double r = newton_polish(p, dp, re);
        if (r < lo - 1e-12 || r > hi + 1e-12) continue;
        if (rel_im > 1e-7 && std::abs(p(r)) > 1e-12 * scale) continue;
        out.push_back(std::clamp(r, lo, hi));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-9; }),
              out.end());
    return out;
}

}  // namespace gfkpp
