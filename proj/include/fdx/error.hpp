#pragma once

#include <stdexcept>
#include <string>

namespace fdx {

/// Failure categories surfaced by the library. The CLI maps them to exit
/// codes: budget_exceeded -> 3, io_error -> 1, everything else -> 2.
enum class Errc {
    dimension_mismatch,
    non_rational,
    diagonal_present,
    same_agent,
    overlapping_bundles,
    not_binary,
    not_power_of_two,
    color_count_mismatch,
    assumption_violated,
    budget_exceeded,
    bad_argument,
    io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, Errc code, const std::string& message) {
    if (!condition)
        fail(code, message);
}

} // namespace fdx
