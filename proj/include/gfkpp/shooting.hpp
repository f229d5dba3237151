#pragma once

#include "gfkpp/model.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace gfkpp {

// Classification tolerances for manifold shooting.
inline constexpr double kConnectTol = 1e-7;       // |Q| accepted as "arrived" near the target
inline constexpr double kTurnTol = 1e-9;          // Q >= -kTurnTol counts as reaching Q = 0
inline constexpr double kTargetWindow = 1e-5;     // |P - target| window for arrival
inline constexpr double kStartOffsetScale = 1e-6; // manifold offset relative to the P span
inline constexpr double kFastSeparation = 1e-6;   // required 1 - lambda+/lambda- for W^ss
inline constexpr double kDegenerateShift = 1e-8;  // speed shift off a double eigenvalue

struct PhasePoint {
    double p = 0.0;
    double q = 0.0;
};

enum class ManifoldBranch {
    unstable_wu,     ///< leaves a saddle towards smaller P with Q < 0
    stable_ws,       ///< enters a saddle from larger P with Q < 0, traced backwards
    fast_stable_wss  ///< enters a stable node along the fast eigenvector, traced backwards
};

std::string_view to_string(ManifoldBranch b) noexcept;

struct ManifoldSpec {
    Equilibrium origin;
    ManifoldBranch branch = ManifoldBranch::unstable_wu;
    /// Displacement along the eigenvector; 0 selects kStartOffsetScale * span.
    double offset = 0.0;
};

/// Linearizes at p_star for speed c and checks that the branch exists there.
ManifoldSpec make_manifold(const GfkppModel& m, double c, double p_star, ManifoldBranch branch,
                           double offset = 0.0);

/// Starting point on a manifold: eigenvector plus the quadratic term of the
/// local graph expansion. `u` is the signed P displacement.
PhasePoint manifold_start(const GfkppModel& m, double c, const Equilibrium& e, double lambda, double u);

enum class Outcome { connect, overshoot, undershoot };

std::string_view to_string(Outcome o) noexcept;

struct ShootResult {
    std::vector<PhasePoint> trajectory;
    Outcome outcome = Outcome::overshoot;
    double p_target = 0.0;
    std::optional<double> q_at_section;
    std::optional<double> p_turn;
};

/// Integrates one manifold branch as a graph Q(P) towards p_target and
/// classifies how it arrives there.
ShootResult shoot(const GfkppModel& m, double c, const ManifoldSpec& spec, double p_target,
                  std::optional<double> section = std::nullopt);

/// Raw graph integration from `start` towards p_stop. Q values are recorded at
/// every landmark reached; landmarks must lie between start.p and p_stop.
struct Trace {
    std::vector<PhasePoint> trajectory;
    std::vector<std::optional<double>> landmark_q;
    bool reached_stop = false;
    std::optional<double> p_turn;
    PhasePoint last;
};

Trace trace_graph(const GfkppModel& m, double c, PhasePoint start, double p_stop,
                  std::span<const double> landmarks, bool record = true);

/// w(c) = Q3 - Q1 at the section P = p2, for the unstable manifold of the
/// saddle p3 and the stable manifold of the saddle p1.
double section_gap(const GfkppModel& m, double c, double p3, double p2, double p1);

struct SeparatrixComparison {
    bool admissible = false;
    double c_used = 0.0;  ///< speed actually integrated (shifted off a double eigenvalue)
    std::vector<double> checkpoints;
    std::vector<std::optional<double>> q_unstable;
    std::vector<std::optional<double>> q_fast;
    std::optional<double> fast_turn;
    std::optional<double> unstable_turn;  ///< W^u reached Q = 0 above the strip
};

/// Orders the unstable manifold of the saddle at `top` (default `hi`) against
/// the fast stable manifold of the node at `lo` on a nine-point grid inside
/// (lo, hi). f must be positive on (lo, hi) and c at least the linear
/// spreading speed at lo. A W^u that turns back above hi counts as lying above.
SeparatrixComparison separatrix_compare(const GfkppModel& m, double c, double lo = 0.0, double hi = 1.0,
                                        std::optional<double> top = std::nullopt);

void write_trajectory_csv(std::ostream& os, std::span<const PhasePoint> traj);

}  // namespace gfkpp
