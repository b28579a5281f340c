#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace recess {

enum class ErrorCode {
    InvalidInput,
    Parse,
    ZeroDirection,
    NotInSet,
    EmptySet,
    PremiseViolated,
    SearchCapExceeded,
    InsufficientSequence,
    CertificateSearchFailed,
    CannotWitness,
    Internal,
};

std::string_view to_string(ErrorCode code);

/** Domain error raised by every operation in the toolkit. */
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace recess
