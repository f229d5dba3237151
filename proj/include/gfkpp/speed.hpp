#pragma once

#include "gfkpp/model.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace gfkpp {

enum class ExistenceCase { A1, A2, B, C1, C2, D };

std::string_view to_string(ExistenceCase c) noexcept;

/// Case of the existence theorem, from the root list and the signs of f'(0), f'(1).
ExistenceCase classify_existence(const GfkppModel& m);

enum class Regime {
    half_line_closed_right,   ///< [c*, inf)
    half_line_closed_left,    ///< (-inf, c*]
    unique,                   ///< {c*}
    half_open_interval,       ///< [c*, c_secondary)
    half_open_interval_left,  ///< (c*, c_secondary]
    empty
};

std::string_view to_string(Regime r) noexcept;

enum class OrbitType { type_a, type_b };

std::string_view to_string(OrbitType t) noexcept;

/// Whether a monostable minimal speed equals the linear spreading speed.
enum class FrontKind { not_applicable, pulled, pushed };

std::string_view to_string(FrontKind k) noexcept;

struct SpeedSet {
    Regime regime = Regime::empty;
    double c_star = 0.0;
    std::optional<double> c_secondary;
    OrbitType orbit_type = OrbitType::type_a;
    FrontKind front = FrontKind::not_applicable;
    /// Set when two cascade speeds coincide to solver resolution and the set
    /// was declared empty on the strict inequality.
    bool boundary_tie = false;
};

/// c -> -c on every endpoint with the matching regime reflection.
SpeedSet negate(const SpeedSet& s);

// Solver resolutions.
inline constexpr double kPulledProbe = 1e-6;     // offset above c_pull for the pulled test
inline constexpr double kSpeedWidth = 1e-6;      // bisection width for monostable speeds
inline constexpr double kBistableWidth = 1e-8;   // bisection width for unique speeds
inline constexpr double kTieTolerance = 1e-6;    // cascade speeds closer than this are a tie

/// M(lo) + 2 sqrt(f'(lo) D(lo)).
double linear_spreading_speed(const GfkppModel& m, double lo = 0.0);

/// Monostable quadratic with D1 = D2: [c*, inf).
SpeedSet closed_form_quadratic(const GfkppModel& m);

struct CubicClosedForm {
    SpeedSet speeds;
    double zeta = 0.0;  ///< profile steepness
};

/// Bistable cubic with D1 = D2: unique speed.
CubicClosedForm closed_form_cubic(const GfkppModel& m);

/// Minimal speed of the front from the saddle `hi` into the node `lo`, with
/// f > 0 on (lo, hi). Pulled when admissible just above the spreading speed.
SpeedSet monostable_speed(const GfkppModel& m, double lo, double hi);

/// Case A1 TypeA speed set on [0, 1].
SpeedSet minimal_speed_numeric(const GfkppModel& m);

/// Unique speed connecting the saddle p3 to the saddle p1 across the node p2.
SpeedSet unique_speed_bistable(const GfkppModel& m, double p3, double p2, double p1);

struct CascadeNode {
    std::size_t upper = 0;  ///< root index of the starting saddle
    std::size_t lower = 0;  ///< root index of the end point
    double c_star_pair = 0.0;
    std::optional<double> c_upper;  ///< open right end when the end point is a node
    bool exists = true;
    bool boundary_tie = false;
    /// Last connected saddles visited from `upper` down to `lower`.
    std::vector<std::size_t> chain;
};

struct CascadeResult {
    SpeedSet speeds;
    std::vector<CascadeNode> nodes;
};

/// TypeA speed set through the chain of last connected saddles. Requires
/// f'(1) < 0; case C2 is handled by typea_speed_set through the symmetries.
CascadeResult cascade_speeds(const GfkppModel& m);

/// TypeA speed set for any supported case.
SpeedSet typea_speed_set(const GfkppModel& m);

/// TypeB speed set, from the TypeA set of the reflected model.
SpeedSet type_b_speed_set(const GfkppModel& m);

}  // namespace gfkpp
