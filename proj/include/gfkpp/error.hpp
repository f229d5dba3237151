#pragma once

#include <stdexcept>
#include <string>

namespace gfkpp {

enum class ErrorCode {
    invalid_argument = 1,
    degenerate_reaction,
    assumption_violation,
    not_equilibrium,
    invalid_manifold,
    integration_failure,
    window_violation,
    precondition,
    wrong_oracle,
    bracket_failure,
    no_upper_bound,
    no_transition,
    instability,
    alignment,
    non_front,
    parse,
    io,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// C layer can translate it without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace gfkpp
