#include "gfkpp/sweep.hpp"

#include "gfkpp/error.hpp"
#include "gfkpp/model_io.hpp"
#include "gfkpp/shooting.hpp"

#include <cmath>
#include <sstream>

namespace gfkpp {

GfkppModel ModelTemplate::at(double d2, double m) const {
    return make_model(d1, d2, m1, m1 + m, ReactionFn::quadratic(k));
}

bool is_pulled(const GfkppModel& m, double probe) {
    return separatrix_compare(m, linear_spreading_speed(m, 0.0) + probe).admissible;
}

TransitionResult transition_scan(double d2, const ModelTemplate& base) {
    auto pushed = [&](double m) { return !is_pulled(base.at(d2, m)); };
    TransitionResult r;
    r.d2 = d2;
    r.pulled_speed = linear_spreading_speed(base.at(d2, 0.0));
    const bool at_lo = pushed(0.0);
    const bool at_hi = pushed(kTransitionMax);
    if (at_lo == at_hi) {
        std::ostringstream os;
        os << "front is " << (at_lo ? "pushed" : "pulled") << " over the whole range M2 - M1 in [0, "
           << kTransitionMax << "] at d2 = " << d2;
        fail(ErrorCode::no_transition, os.str());
    }
    double lo = 0.0;
    double hi = kTransitionMax;
    while (hi - lo > kTransitionWidth) {
        const double mid = 0.5 * (lo + hi);
        (pushed(mid) ? hi : lo) = mid;
    }
    r.m_trans = 0.5 * (lo + hi);
    return r;
}

double asymptotic_slope(double d2, const ModelTemplate& base) {
    return minimal_speed_numeric(base.at(d2, kSlopeM)).c_star / kSlopeM;
}

std::vector<SweepRow> sweep_m2(const ModelTemplate& base, std::span<const double> d2s, std::span<const double> ms,
                               unsigned jobs) {
    const std::size_t n = d2s.size() * ms.size();
    return parallel_map(n, jobs, [&](std::size_t i) {
        SweepRow row;
        row.d2 = d2s[i / ms.size()];
        row.m = ms[i % ms.size()];
        try {
            const SpeedSet s = minimal_speed_numeric(base.at(row.d2, row.m));
            row.c_star = s.c_star;
            row.front = s.front;
        } catch (const Error& e) {
            row.error = e.what();
        }
        return row;
    });
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) fail(ErrorCode::invalid_argument, "line fit needs two or more points");
    const double n = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) fail(ErrorCode::invalid_argument, "line fit needs distinct x values");
    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r_squared = syy == 0.0 ? 1.0 : sxy * sxy / (sxx * syy);
    return f;
}

std::vector<double> range_grid(double a, double b, double step) {
    if (!(step > 0.0) || !std::isfinite(a) || !std::isfinite(b) || !std::isfinite(step))
        fail(ErrorCode::invalid_argument, "range needs finite bounds and step > 0");
    if (b < a) fail(ErrorCode::invalid_argument, "range needs a <= b");
    const double count = (b - a) / step;
    const auto n = static_cast<long>(std::floor(count + 1e-9));
    std::vector<double> out;
    for (long i = 0; i <= n; ++i) out.push_back(i == n && std::abs(count - n) <= 1e-9 ? b : a + i * step);
    return out;
}

namespace {

std::vector<double> parse_range_item(std::string_view text) {
    std::vector<std::string_view> parts;
    while (true) {
        const auto colon = text.find(':');
        parts.push_back(text.substr(0, colon));
        if (colon == std::string_view::npos) break;
        text.remove_prefix(colon + 1);
    }
    if (parts.size() == 1) return {parse_number(parts[0])};
    if (parts.size() != 3) fail(ErrorCode::parse, "range must be a:b:step");
    return range_grid(parse_number(parts[0]), parse_number(parts[1]), parse_number(parts[2]));
}

}  // namespace

std::vector<double> parse_range(std::string_view text) {
    std::vector<double> out;
    while (true) {
        const auto comma = text.find(',');
        const auto item = parse_range_item(text.substr(0, comma));
        out.insert(out.end(), item.begin(), item.end());
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

unsigned resolve_jobs(unsigned jobs) {
    if (jobs > 0) return jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace gfkpp
