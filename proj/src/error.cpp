#include "fdx/error.hpp"

namespace fdx {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::non_rational: return "non_rational";
    case Errc::diagonal_present: return "diagonal_present";
    case Errc::same_agent: return "same_agent";
    case Errc::overlapping_bundles: return "overlapping_bundles";
    case Errc::not_binary: return "not_binary";
    case Errc::not_power_of_two: return "not_power_of_two";
    case Errc::color_count_mismatch: return "color_count_mismatch";
    case Errc::assumption_violated: return "assumption_violated";
    case Errc::budget_exceeded: return "budget_exceeded";
    case Errc::bad_argument: return "bad_argument";
    case Errc::io_error: return "io_error";
    }
    return "unknown";
}

} // namespace fdx
