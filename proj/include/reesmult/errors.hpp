#pragma once

#include <stdexcept>
#include <string>

namespace reesmult {

// Machine-readable failure codes.  The CLI maps these 1:1 onto the "code"
// field of its error documents, so the spellings are part of the interface.
enum class errc {
    arity_mismatch,
    context_mismatch,
    infinite_length,
    not_contained,
    not_yet_polynomial,
    non_integer_multiplicity,
    negative_degree,
    non_vanishing_boundary,
    degree_mismatch,
    dimension_unsupported,
    hypothesis_violated,
    non_integer_result,
    index_out_of_range,
    parse_error,
    unknown_variable,
    duplicate_ideal_name,
    bad_request,
    internal,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::arity_mismatch: return "ArityMismatch";
        case errc::context_mismatch: return "ContextMismatch";
        case errc::infinite_length: return "InfiniteLength";
        case errc::not_contained: return "NotContained";
        case errc::not_yet_polynomial: return "NotYetPolynomial";
        case errc::non_integer_multiplicity: return "NonIntegerMultiplicity";
        case errc::negative_degree: return "NegativeDegree";
        case errc::non_vanishing_boundary: return "NonVanishingBoundary";
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::dimension_unsupported: return "DimensionUnsupported";
        case errc::hypothesis_violated: return "HypothesisViolated";
        case errc::non_integer_result: return "NonIntegerResult";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::parse_error: return "ParseError";
        case errc::unknown_variable: return "UnknownVariable";
        case errc::duplicate_ideal_name: return "DuplicateIdealName";
        case errc::bad_request: return "BadRequest";
        case errc::internal: return "InternalError";
    }
    return "InternalError";
}

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
          code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
    throw Error(code, msg);
}

}  // namespace reesmult
