#include "vcapprox/error.hpp"

namespace vcapprox {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidEdge: return "InvalidEdge";
        case ErrorCode::InvalidWeight: return "InvalidWeight";
        case ErrorCode::InvalidSet: return "InvalidSet";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InconsistentCut: return "InconsistentCut";
        case ErrorCode::CrownViolation: return "CrownViolation";
        case ErrorCode::NotACover: return "NotACover";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::InvalidSwapSize: return "InvalidSwapSize";
        case ErrorCode::InvalidEpsilon: return "InvalidEpsilon";
        case ErrorCode::InvalidShape: return "InvalidShape";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::MissingHeader: return "MissingHeader";
        case ErrorCode::DuplicateVertexLine: return "DuplicateVertexLine";
        case ErrorCode::EdgeCountMismatch: return "EdgeCountMismatch";
        case ErrorCode::MalformedLine: return "MalformedLine";
    }
    return "Unknown";
}

}  // namespace vcapprox
