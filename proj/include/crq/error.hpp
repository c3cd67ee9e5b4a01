#pragma once

#include <stdexcept>
#include <string>

namespace crq {

enum class ErrorKind {
    InvalidArgument,
    MissingAssignment,
    NotPolynomialDeg2,
    NeedMoreSamples,
    NotInvertible,
    InvalidTwist,
    InvalidForm,
    InvalidParameter,
    SingularPoint,
    NotInGLQ,
    InvalidGrading,
    Unsupported,
    Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace crq
