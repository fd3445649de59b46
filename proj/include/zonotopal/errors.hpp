#pragma once

#include <stdexcept>
#include <string>

namespace zonotopal {

enum class ErrorKind {
    InvalidArgument,
    DivisionByZero,
    RankDeficient,
    TorsionUnsupported,
    TorsionPivot,
    NotPointed,
    NotInCone,
    NotUnimodular,
    NonMember,
    SingularGram,
    SamplesRequired,
    DegenerateSample,
    InterpolationSingular,
    InsufficientPoints,
    NonIntegerResult,
    InternalError,
};

const char* kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const { return kind_; }
    // Internal failures mean a broken invariant rather than bad input.
    bool is_internal() const {
        return kind_ == ErrorKind::InternalError || kind_ == ErrorKind::NonIntegerResult;
    }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

}  // namespace zonotopal
