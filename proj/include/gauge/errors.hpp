#pragma once

#include <stdexcept>
#include <string>

namespace gauge {

enum class errc {
    dimension_mismatch,
    zero_direction,
    empty_input,
    not_full_dimensional,
    unbounded,
    empty_polytope,
    degenerate_gauge,
    degenerate_body,
    origin_not_in_body,
    not_a_simplex,
    not_centered,
    not_complete,
    not_contained,
    not_a_completion,
    not_symmetric,
    dimension_too_low,
    dimension_unsupported,
    bad_params,
    unknown_suite,
    parse_error,
    construction_failed,
    internal,
};

const char* errc_name(errc c);

class gauge_error : public std::runtime_error {
public:
    gauge_error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
    throw gauge_error(code, msg);
}

inline void require(bool ok, errc code, const char* msg) {
    if (!ok) fail(code, msg);
}

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::zero_direction: return "ZeroDirection";
        case errc::empty_input: return "EmptyInput";
        case errc::not_full_dimensional: return "NotFullDimensional";
        case errc::unbounded: return "Unbounded";
        case errc::empty_polytope: return "EmptyPolytope";
        case errc::degenerate_gauge: return "DegenerateGauge";
        case errc::degenerate_body: return "DegenerateBody";
        case errc::origin_not_in_body: return "OriginNotInBody";
        case errc::not_a_simplex: return "NotASimplex";
        case errc::not_centered: return "NotCentered";
        case errc::not_complete: return "NotComplete";
        case errc::not_contained: return "NotContained";
        case errc::not_a_completion: return "NotACompletion";
        case errc::not_symmetric: return "NotSymmetric";
        case errc::dimension_too_low: return "DimensionTooLow";
        case errc::dimension_unsupported: return "DimensionUnsupported";
        case errc::bad_params: return "BadParams";
        case errc::unknown_suite: return "UnknownSuite";
        case errc::parse_error: return "ParseError";
        case errc::construction_failed: return "ConstructionFailed";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

} // namespace gauge
