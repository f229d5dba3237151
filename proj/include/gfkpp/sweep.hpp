#pragma once

#include "gfkpp/model.hpp"
#include "gfkpp/speed.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace gfkpp {

/// Fixed part of the quadratic model family scanned over (D2, M2 - M1).
struct ModelTemplate {
    double k = 1.0;
    double d1 = 1.0;
    double m1 = 0.0;

    GfkppModel at(double d2, double m) const;
};

inline constexpr double kTransitionProbe = 1e-10;  // c - c_pull at which "pulled" is tested
inline constexpr double kTransitionWidth = 1e-4;
inline constexpr double kTransitionMax = 50.0;
inline constexpr double kSlopeM = 50.0;

struct TransitionResult {
    double d2 = 0.0;
    double m_trans = 0.0;
    double pulled_speed = 0.0;
};

/// True when the front of `m` is still pulled at c_pull + probe.
bool is_pulled(const GfkppModel& m, double probe = kTransitionProbe);

/// Value of M2 - M1 where the minimal speed leaves c_pull, by bisection on [0, 50].
TransitionResult transition_scan(double d2, const ModelTemplate& base = {});

/// K = c*(M2 - M1 = 50) / 50.
double asymptotic_slope(double d2, const ModelTemplate& base = {});

struct SweepRow {
    double d2 = 0.0;
    double m = 0.0;
    double c_star = 0.0;
    FrontKind front = FrontKind::not_applicable;
    std::optional<std::string> error;
};

/// Minimal speeds on the grid d2s x ms, rows ordered d2-major.
std::vector<SweepRow> sweep_m2(const ModelTemplate& base, std::span<const double> d2s, std::span<const double> ms,
                               unsigned jobs);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

LinearFit fit_line(std::span<const double> x, std::span<const double> y);

/// Comma-separated items, each a number or an inclusive grid "a:b:step"; the
/// last grid point is b when (b - a) / step is integral.
std::vector<double> parse_range(std::string_view text);
std::vector<double> range_grid(double a, double b, double step);

/// Number of workers for `jobs`; 0 selects the hardware concurrency.
unsigned resolve_jobs(unsigned jobs);

/// Evaluates fn(0) .. fn(n - 1) on up to `jobs` threads. Results keep input
/// order; the exception of the lowest failing index is rethrown.
template <class Fn>
auto parallel_map(std::size_t n, unsigned jobs, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using R = decltype(fn(std::size_t{}));
    std::vector<std::optional<R>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(resolve_jobs(jobs), static_cast<unsigned>(n)));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<R> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

}  // namespace gfkpp
