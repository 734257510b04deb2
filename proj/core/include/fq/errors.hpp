#pragma once

#include <stdexcept>
#include <string>

namespace fq {

// Library error with a stable machine-readable code. The CLI maps the code
// into structured {"error": code, "detail": ...} output.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define FQ_DEFINE_ERROR(Name, code_str)                                      \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& detail) : Error(code_str, detail) {} \
    }

FQ_DEFINE_ERROR(InvalidInput, "invalid_input");
FQ_DEFINE_ERROR(NonDominant, "non_dominant");
FQ_DEFINE_ERROR(GroupMismatch, "group_mismatch");
FQ_DEFINE_ERROR(NotACharacter, "not_a_character");
FQ_DEFINE_ERROR(RadiusExceedsTrust, "radius_exceeds_trust");
FQ_DEFINE_ERROR(InsufficientRadius, "insufficient_radius");
FQ_DEFINE_ERROR(NegativeCharacter, "negative_character");
FQ_DEFINE_ERROR(EmptyTrust, "empty_trust");
FQ_DEFINE_ERROR(NotProper, "not_proper");
FQ_DEFINE_ERROR(NotFullDimensional, "not_full_dimensional");
FQ_DEFINE_ERROR(NotAdapted, "not_adapted");
FQ_DEFINE_ERROR(NotInterior, "not_interior");
FQ_DEFINE_ERROR(NoConvergence, "no_convergence");
FQ_DEFINE_ERROR(OriginNotInterior, "origin_not_interior");

#undef FQ_DEFINE_ERROR

} // namespace fq
