#include "zonotopal/errors.hpp"

namespace zonotopal {

const char* kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::TorsionUnsupported: return "TorsionUnsupported";
        case ErrorKind::TorsionPivot: return "TorsionPivot";
        case ErrorKind::NotPointed: return "NotPointed";
        case ErrorKind::NotInCone: return "NotInCone";
        case ErrorKind::NotUnimodular: return "NotUnimodular";
        case ErrorKind::NonMember: return "NonMember";
        case ErrorKind::SingularGram: return "SingularGram";
        case ErrorKind::SamplesRequired: return "SamplesRequired";
        case ErrorKind::DegenerateSample: return "DegenerateSample";
        case ErrorKind::InterpolationSingular: return "InterpolationSingular";
        case ErrorKind::InsufficientPoints: return "InsufficientPoints";
        case ErrorKind::NonIntegerResult: return "NonIntegerResult";
        case ErrorKind::InternalError: return "InternalError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace zonotopal
