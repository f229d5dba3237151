#include "gfkpp/error.hpp"

namespace gfkpp {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::invalid_argument: return "invalid_argument";
        case ErrorCode::degenerate_reaction: return "degenerate_reaction";
        case ErrorCode::assumption_violation: return "assumption_violation";
        case ErrorCode::not_equilibrium: return "not_equilibrium";
        case ErrorCode::invalid_manifold: return "invalid_manifold";
        case ErrorCode::integration_failure: return "integration_failure";
        case ErrorCode::window_violation: return "window_violation";
        case ErrorCode::precondition: return "precondition";
        case ErrorCode::wrong_oracle: return "wrong_oracle";
        case ErrorCode::bracket_failure: return "bracket_failure";
        case ErrorCode::no_upper_bound: return "no_upper_bound";
        case ErrorCode::no_transition: return "no_transition";
        case ErrorCode::instability: return "instability";
        case ErrorCode::alignment: return "alignment";
        case ErrorCode::non_front: return "non_front";
        case ErrorCode::parse: return "parse";
        case ErrorCode::io: return "io";
    }
    return "unknown";
}

}  // namespace gfkpp
