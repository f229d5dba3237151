#pragma once

#include "gfkpp/error.hpp"

#include <optional>

namespace gfkpp::test {

/// Error code raised by fn, or nullopt when it returns normally.
template <class Fn>
std::optional<ErrorCode> error_code(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

}  // namespace gfkpp::test
