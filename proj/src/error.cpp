#include "recess/error.hpp"

namespace recess {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::NotInSet: return "NotInSet";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::PremiseViolated: return "PremiseViolated";
    case ErrorCode::SearchCapExceeded: return "SearchCapExceeded";
    case ErrorCode::InsufficientSequence: return "InsufficientSequence";
    case ErrorCode::CertificateSearchFailed: return "CertificateSearchFailed";
    case ErrorCode::CannotWitness: return "CannotWitness";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace recess
